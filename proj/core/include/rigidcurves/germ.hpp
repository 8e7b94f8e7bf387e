#ifndef RIGIDCURVES_GERM_HPP
#define RIGIDCURVES_GERM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rigidcurves/extfield.hpp"
#include "rigidcurves/trivar.hpp"

namespace rigidcurves {

enum class Decoration { None, UpperM, UpperN, UpperMN };

// Topological type x^m + y^n (2 <= m <= n), with the decorated variants
// y(x^m+y^n), x(x^m+y^n), xy(x^m+y^n); m = n is the ordinary multiple point.
// Decorated tags allow m = 1 (smooth branch with lines attached).
struct SingTypeTag {
    int m = 0;
    int n = 0;
    Decoration dec = Decoration::None;

    bool ordinary() const { return m == n && dec == Decoration::None; }
    long long delta() const;
    int branch_count() const;  // m_S
    std::string str() const;

    friend bool operator==(const SingTypeTag& a, const SingTypeTag& b) {
        return a.m == b.m && a.n == b.n && a.dec == b.dec;
    }
    friend bool operator<(const SingTypeTag& a, const SingTypeTag& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.n != b.n) return a.n < b.n;
        return static_cast<int>(a.dec) < static_cast<int>(b.dec);
    }
};

SingTypeTag tag_Tmn(int m, int n);
SingTypeTag tag_A(int k);  // A_k = T(2, k+1)
SingTypeTag tag_ordinary(int m);
SingTypeTag tag_decorated(int m, int n, Decoration dec);
// parses the wire strings "T(m,n)", "T(m,n)^m", "T(m,n)^n", "T(m,n)^{m,n}", "A_k"
SingTypeTag tag_from_string(const std::string& s);

long long delta_of_type(const SingTypeTag& tag);

// multiplicity sequence of the x^m + y^n branch germ, gcd(m, n) = 1
std::vector<int> model_multiplicity_sequence(int m, int n);

inline constexpr int kUnknownContact = -2;

// ---- implicit germ analysis --------------------------------------------

// Branch of an implicit germ at the origin of a chart; an entry may stand
// for several conjugate branches (count > 1).
struct LocalBranch {
    int count = 1;
    bool smooth = true;
    int e = 1;
    int c = kUnknownContact;  // contact with the own tangent
    std::vector<int> multseq;
    long long delta = 0;
    // tangent direction a*x + b*y = 0; dir_known false marks an irrational block
    ExtScalar dir_a, dir_b;
    bool dir_known = false;
    long long within_pair = 1;  // pairwise intersection inside a conjugate block
};

struct LocalGerm {
    int mult = 0;
    long long delta = 0;
    std::vector<LocalBranch> branches;
    // intersection numbers between entries i < j (per representative branch)
    std::map<std::pair<int, int>, long long> pairI;

    int branch_total() const {
        int t = 0;
        for (const auto& b : branches) t += b.count;
        return t;
    }
};

// Resolves the germ of f at the origin by blowups. Supports exactly the
// configurations occurring in the supported singularity list; anything else
// raises UnsupportedGerm.
LocalGerm analyze_implicit_germ(const Biv<ExtScalar>& f);

// ---- classification ------------------------------------------------------

// Branch summary used by the classifier; assembled by audits from parametrized
// or implicit branch data across all components through one point.
struct GermBranchSummary {
    int component = -1;
    int count = 1;
    bool smooth = true;
    bool is_line = false;
    int e = 1;
    int c = kUnknownContact;  // topological contact for singular branches
    long long delta = 0;
    std::vector<int> multseq;
    long long within_pair = 1;
};

struct GermInput {
    std::vector<GermBranchSummary> branches;
    std::map<std::pair<int, int>, long long> pairI;  // representative pairwise
};

// The closed-world classifier: returns the unique matching supported tag and
// verifies its delta bookkeeping; throws UnsupportedGerm otherwise.
SingTypeTag classify_germ(const GermInput& in);

// total delta of the germ described by the input (branch deltas + pairwise)
long long germ_delta(const GermInput& in);

} // namespace rigidcurves

#endif
