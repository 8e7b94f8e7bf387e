#ifndef RIGIDCURVES_AUDIT_HPP
#define RIGIDCURVES_AUDIT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidcurves/germ.hpp"
#include "rigidcurves/paramcurve.hpp"
#include "rigidcurves/points.hpp"
#include "rigidcurves/trivar.hpp"

namespace rigidcurves {

// One irreducible piece of a configuration. Parametrized components carry
// their implicit form as well; implicit-only components (non-rational curves)
// carry just the form.
struct Component {
    std::optional<ParamCurve> param;
    Trivar form;
    std::string label;

    int degree() const { return form.total_degree(); }
    bool is_line() const { return degree() == 1; }
};

Component make_component(const ParamCurve& c);
Component make_component(const Trivar& form, std::string label = "");

struct SingRecord {
    AlgPoint center;
    SingTypeTag tag;
    std::vector<int> component_set;  // J, sorted component indices
    int point_count = 1;             // conjugate points represented
    long long delta_per_point = 0;
    std::map<int, long long> delta_by_component;  // per point
    std::vector<GermBranchSummary> branches;
};

struct DescriptorEntry {
    SingTypeTag tag;
    std::vector<int> components;  // J
    int count = 0;                // number of points

    friend bool operator<(const DescriptorEntry& a, const DescriptorEntry& b) {
        if (!(a.tag == b.tag)) return a.tag < b.tag;
        return a.components < b.components;
    }
    friend bool operator==(const DescriptorEntry& a, const DescriptorEntry& b) {
        return a.tag == b.tag && a.components == b.components && a.count == b.count;
    }
};

struct AuditResult {
    std::vector<int> degrees;
    std::vector<long long> genus;
    std::vector<SingRecord> records;
    std::vector<DescriptorEntry> descriptor;

    std::string descriptor_str() const;
    long long total_delta() const;
};

// Full certification of a configuration: every singular point located and
// classified, genus bookkeeping checked (parametrized components must close
// at genus zero exactly).
AuditResult singularity_audit(const std::vector<Component>& components);

std::string descriptor_to_string(const std::vector<DescriptorEntry>& descriptor);

} // namespace rigidcurves

#endif
