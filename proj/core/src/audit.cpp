#include "rigidcurves/audit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rigidcurves/errors.hpp"

namespace rigidcurves {

Component make_component(const ParamCurve& c) {
    Component comp;
    comp.param = c;
    comp.form = image_form(c);
    comp.label = c.label();
    return comp;
}

Component make_component(const Trivar& form, std::string label) {
    if (form.zero() || form.total_degree() < 1)
        throw DegenerateInput("make_component: not a curve");
    if (!form.is_homogeneous()) throw DegenerateInput("make_component: form not homogeneous");
    Component comp;
    comp.form = form.normalized();
    comp.label = std::move(label);
    if (comp.form.total_degree() == 1) {
        // parametrize the line a z1 + b z2 + c z3 = 0 through two of the
        // coordinate-plane intersections
        Rat a = comp.form.coeff({1, 0, 0});
        Rat b = comp.form.coeff({0, 1, 0});
        Rat c = comp.form.coeff({0, 0, 1});
        std::array<Rat, 3> p1{}, p2{};
        if (!is_zero(c)) {
            p1 = {c, Rat(0), -a};
            p2 = {Rat(0), c, -b};
        } else if (!is_zero(b)) {
            p1 = {b, -a, Rat(0)};
            p2 = {Rat(0), Rat(0), Rat(1)};
        } else {
            p1 = {Rat(0), Rat(1), Rat(0)};
            p2 = {Rat(0), Rat(0), Rat(1)};
        }
        std::array<UniPoly, 3> co;
        for (int i = 0; i < 3; ++i)
            co[static_cast<std::size_t>(i)] =
                UniPoly(std::vector<Rat>{p2[static_cast<std::size_t>(i)], p1[static_cast<std::size_t>(i)]});
        comp.param = ParamCurve(co[0], co[1], co[2], comp.label);
    }
    return comp;
}

namespace {

bool proj_parallel(const std::array<ExtScalar, 3>& u, const std::array<ExtScalar, 3>& v) {
    FieldPtr fu, fv;
    for (const auto& x : u)
        if (x.ctx()) fu = x.ctx();
    for (const auto& x : v)
        if (x.ctx()) fv = x.ctx();
    if (fu && fv && !same_field(fu, fv)) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            ExtScalar cr = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] -
                           u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
            if (!is_zero(cr)) return false;
        }
    return true;
}

bool coords_rational(const std::array<ExtScalar, 3>& u) {
    // after projective normalization by the first nonzero coordinate
    int first = -1;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(u[static_cast<std::size_t>(i)])) { first = i; break; }
    if (first < 0) return true;
    ExtScalar s = inv(u[static_cast<std::size_t>(first)]);
    for (int i = 0; i < 3; ++i)
        if (!(s * u[static_cast<std::size_t>(i)]).rational()) return false;
    return true;
}

// local branch entry during assembly
struct Entry {
    GermBranchSummary sum;
    std::array<ExtScalar, 3> tangent{};
    bool tangent_known = false;
    // parametrized branches remember where they came from for pullbacks
    const ParamCurve* curve = nullptr;
    P1Point param;
    // implicit branches remember the local analysis they came from
    int implicit_group = -1;  // index into the per-point implicit germ list
    int implicit_index = -1;
};

int topological_contact(int e, long long delta, const std::string& where) {
    if (e <= 1) return 2;
    long long num = 2 * delta;
    if (num % (e - 1) != 0)
        throw UnsupportedGerm("audit: branch delta incompatible with a T(m,n) type at " + where);
    long long c = num / (e - 1) + 1;
    if (c <= e || std::gcd(static_cast<long long>(e), c) != 1)
        throw UnsupportedGerm("audit: reconstructed contact outside the supported list at " + where);
    return static_cast<int>(c);
}

// tangent line of an implicit local branch as a projective line
std::array<ExtScalar, 3> chart_direction_line(const AlgPoint& p, int chart, const ExtScalar& da,
                                              const ExtScalar& db) {
    // local coords: x = z_a/z_k - p_a, y = z_b/z_k - p_b, with p_k = 1
    int a = chart == 0 ? 1 : 0;
    int b = chart == 2 ? 1 : 2;
    std::array<ExtScalar, 3> line{ExtScalar(0), ExtScalar(0), ExtScalar(0)};
    // da*(z_a - p_a z_k) + db*(z_b - p_b z_k) = 0
    line[static_cast<std::size_t>(a)] = line[static_cast<std::size_t>(a)] + da;
    line[static_cast<std::size_t>(b)] = line[static_cast<std::size_t>(b)] + db;
    line[static_cast<std::size_t>(chart)] =
        line[static_cast<std::size_t>(chart)] -
        (da * p.coords[static_cast<std::size_t>(a)] + db * p.coords[static_cast<std::size_t>(b)]);
    return line;
}

} // namespace

std::string descriptor_to_string(const std::vector<DescriptorEntry>& descriptor) {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : descriptor) {
        if (!first) os << " + ";
        if (d.count != 1) os << d.count << " ";
        os << d.tag.str();
        os << " @J(";
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            if (i) os << ",";
            os << d.components[i];
        }
        os << ")";
        first = false;
    }
    if (first) os << "smooth";
    return os.str();
}

std::string AuditResult::descriptor_str() const { return descriptor_to_string(descriptor); }

long long AuditResult::total_delta() const {
    long long d = 0;
    for (const auto& r : records) d += static_cast<long long>(r.point_count) * r.delta_per_point;
    return d;
}

AuditResult singularity_audit(const std::vector<Component>& components) {
    if (components.empty()) throw DegenerateInput("singularity_audit: no components");
    AuditResult out;

    // reject duplicated components (non-reduced configurations)
    for (std::size_t i = 0; i < components.size(); ++i) {
        out.degrees.push_back(components[i].degree());
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (components[i].form == components[j].form)
                throw InfiniteIntersection("singularity_audit: repeated component");
    }

    // candidate centers: per-component singular points and pairwise intersections
    std::vector<AlgPoint> centers;
    for (const auto& comp : components) {
        if (comp.degree() >= 2)
            for (auto& p : singular_points(comp.form)) centers.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            for (auto& p : intersection_points(components[i].form, components[j].form))
                centers.push_back(std::move(p));
    std::sort(centers.begin(), centers.end(),
              [](const AlgPoint& a, const AlgPoint& b) { return a.key() < b.key(); });
    centers.erase(std::unique(centers.begin(), centers.end(),
                              [](const AlgPoint& a, const AlgPoint& b) { return a.key() == b.key(); }),
                  centers.end());

    for (const auto& P : centers) {
        // components through the point
        std::vector<int> J;
        for (std::size_t i = 0; i < components.size(); ++i)
            if (lies_on(P, components[i].form)) J.push_back(static_cast<int>(i));
        if (J.empty()) continue;  // spurious candidate

        FieldPtr KP = P.field;
        int chart = 0;
        while (is_zero(P.coords[static_cast<std::size_t>(chart)])) ++chart;

        std::vector<Entry> entries;
        std::vector<LocalGerm> implicit_germs;
        std::vector<int> implicit_group_of_comp(components.size(), -1);

        for (int ci : J) {
            const Component& comp = components[static_cast<std::size_t>(ci)];
            if (comp.is_line()) {
                Entry e;
                e.sum.component = ci;
                e.sum.count = 1;
                e.sum.smooth = true;
                e.sum.is_line = true;
                e.sum.e = 1;
                e.sum.c = kContactInfinite;
                // line coefficients as the tangent
                for (int v = 0; v < 3; ++v) {
                    Expo ex{0, 0, 0};
                    ex[static_cast<std::size_t>(v)] = 1;
                    e.tangent[static_cast<std::size_t>(v)] = ExtScalar(comp.form.coeff(ex));
                }
                e.tangent_known = true;
                if (comp.param) {
                    e.curve = &*comp.param;
                    auto pre = preimage_params(*comp.param, P);
                    if (pre.size() != 1)
                        throw UnsupportedGerm("audit: line with unexpected preimage count");
                    e.param = pre[0];
                } else {
                    throw UnsupportedGerm("audit: line components must be parametrized");
                }
                entries.push_back(std::move(e));
            } else if (comp.param) {
                for (const auto& t0 : preimage_params(*comp.param, P)) {
                    Branch br = branch_at(*comp.param, t0);
                    Entry e;
                    e.sum.component = ci;
                    e.sum.smooth = br.smooth();
                    e.sum.e = br.e;
                    e.sum.delta = br.delta;
                    e.sum.multseq = br.multseq;
                    e.sum.c = br.smooth() ? (br.c == kContactInfinite ? kContactInfinite : br.c)
                                          : topological_contact(br.e, br.delta, P.str());
                    // orbit size of the parameter over the center's field
                    int count = 1;
                    if (!t0.infinite && t0.t.ctx()) {
                        int lt = t0.t.ctx()->degree();
                        int lk = KP ? KP->degree() : 1;
                        count = lt / lk;
                        if (count * lk != lt)
                            throw UnsupportedGerm("audit: incompatible parameter field degrees");
                    }
                    e.sum.count = count;
                    if (count >= 2) {
                        // conjugate branches; tangents must be conjugate-distinct
                        if (coords_rational(br.tangent) && !(KP && KP->degree() > 1))
                            throw UnsupportedGerm(
                                "audit: conjugate branches sharing a tangent are unsupported");
                        e.sum.within_pair = static_cast<long long>(br.e) * br.e;
                    }
                    e.tangent = br.tangent;
                    e.tangent_known = true;
                    e.curve = &*comp.param;
                    e.param = t0;
                    entries.push_back(std::move(e));
                }
            } else {
                // implicit component: local blowup analysis
                BivQ local = dehomogenize(comp.form, chart);
                BivE lifted = lift_biv(local);
                int a = chart == 0 ? 1 : 0;
                int b = chart == 2 ? 1 : 2;
                BivE shifted = biv_shift(lifted, P.coords[static_cast<std::size_t>(a)],
                                         P.coords[static_cast<std::size_t>(b)]);
                LocalGerm lg = analyze_implicit_germ(shifted);
                implicit_group_of_comp[static_cast<std::size_t>(ci)] =
                    static_cast<int>(implicit_germs.size());
                for (std::size_t bi = 0; bi < lg.branches.size(); ++bi) {
                    const LocalBranch& lb = lg.branches[bi];
                    Entry e;
                    e.sum.component = ci;
                    e.sum.count = lb.count;
                    e.sum.smooth = lb.smooth;
                    e.sum.e = lb.e;
                    e.sum.delta = lb.delta;
                    e.sum.multseq = lb.multseq;
                    e.sum.within_pair = lb.within_pair;
                    e.sum.c = lb.smooth ? lb.c : topological_contact(lb.e, lb.delta, P.str());
                    if (lb.dir_known) {
                        e.tangent = chart_direction_line(P, chart, lb.dir_a, lb.dir_b);
                        e.tangent_known = true;
                    }
                    e.implicit_group = implicit_group_of_comp[static_cast<std::size_t>(ci)];
                    e.implicit_index = static_cast<int>(bi);
                    entries.push_back(std::move(e));
                }
                implicit_germs.push_back(std::move(lg));
            }
        }

        // skip honest smooth points (can only appear through spurious candidates)
        int total_branches = 0;
        for (const auto& e : entries) total_branches += e.sum.count;
        if (total_branches <= 1 && entries.size() == 1 && entries[0].sum.smooth) continue;

        // pairwise intersection numbers
        GermInput germ;
        for (const auto& e : entries) germ.branches.push_back(e.sum);

        // distribution of a parametrized branch's pullback among the branches
        // of another component
        auto cross_by_pullback = [&](const Entry& from, int comp_to,
                                     const std::vector<std::size_t>& to_entries)
            -> std::map<std::size_t, long long> {
            int total = pullback_valuation(components[static_cast<std::size_t>(comp_to)].form,
                                           *from.curve, from.param);
            if (total == kContactInfinite)
                throw InfiniteIntersection("audit: component pullback vanishes identically");
            std::map<std::size_t, long long> res;
            std::vector<std::size_t> tangential;
            long long transverse_sum = 0;
            for (std::size_t te : to_entries) {
                const Entry& to = entries[te];
                bool tang = from.tangent_known && to.tangent_known &&
                            proj_parallel(from.tangent, to.tangent);
                if (tang) tangential.push_back(te);
                else {
                    res[te] = static_cast<long long>(from.sum.e) * to.sum.e;
                    transverse_sum += static_cast<long long>(to.sum.count) * res[te];
                }
            }
            if (tangential.empty()) {
                if (total != transverse_sum)
                    throw UnsupportedGerm("audit: intersection distribution failed (hidden tangency) at " +
                                          P.str());
            } else if (tangential.size() == 1 && entries[tangential[0]].sum.count == 1) {
                long long rem = total - transverse_sum;
                if (rem <= static_cast<long long>(from.sum.e) * entries[tangential[0]].sum.e)
                    throw UnsupportedGerm("audit: tangential intersection too small at " + P.str());
                res[tangential[0]] = rem;
            } else {
                throw UnsupportedGerm("audit: ambiguous tangential configuration at " + P.str());
            }
            return res;
        };

        for (std::size_t i = 0; i < entries.size(); ++i) {
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                const Entry& A = entries[i];
                const Entry& B = entries[j];
                long long I = -1;
                if (A.sum.component == B.sum.component) {
                    if (A.implicit_group >= 0 && A.implicit_group == B.implicit_group) {
                        I = implicit_germs[static_cast<std::size_t>(A.implicit_group)].pairI.at(
                            {std::min(A.implicit_index, B.implicit_index),
                             std::max(A.implicit_index, B.implicit_index)});
                    } else if (A.curve) {
                        if (A.tangent_known && B.tangent_known &&
                            !proj_parallel(A.tangent, B.tangent))
                            I = static_cast<long long>(A.sum.e) * B.sum.e;
                        else
                            throw UnsupportedGerm(
                                "audit: tangential same-component branch pair at " + P.str());
                    }
                } else if (A.curve) {
                    std::vector<std::size_t> to{j};
                    for (std::size_t k2 = 0; k2 < entries.size(); ++k2)
                        if (k2 != j && entries[k2].sum.component == B.sum.component &&
                            std::find(to.begin(), to.end(), k2) == to.end())
                            to.push_back(k2);
                    auto res = cross_by_pullback(A, B.sum.component, to);
                    I = res.at(j);
                } else if (B.curve) {
                    std::vector<std::size_t> to{i};
                    for (std::size_t k2 = 0; k2 < entries.size(); ++k2)
                        if (k2 != i && entries[k2].sum.component == A.sum.component &&
                            std::find(to.begin(), to.end(), k2) == to.end())
                            to.push_back(k2);
                    auto res = cross_by_pullback(B, A.sum.component, to);
                    I = res.at(i);
                } else {
                    throw UnsupportedGerm("audit: implicit-implicit component pair at " + P.str());
                }
                if (I < 0) throw UnsupportedGerm("audit: unresolved branch pair at " + P.str());
                germ.pairI[{static_cast<int>(i), static_cast<int>(j)}] = I;
            }
        }

        SingRecord rec;
        rec.center = P;
        rec.component_set = J;
        rec.point_count = P.orbit_size();
        rec.tag = classify_germ(germ);
        rec.delta_per_point = germ_delta(germ);
        rec.branches = germ.branches;
        // per-component delta (restriction of the germ to one component)
        for (int ci : J) {
            GermInput restricted;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].sum.component == ci) keep.push_back(i);
            for (std::size_t i : keep) restricted.branches.push_back(entries[i].sum);
            for (std::size_t a2 = 0; a2 < keep.size(); ++a2)
                for (std::size_t b2 = a2 + 1; b2 < keep.size(); ++b2)
                    restricted.pairI[{static_cast<int>(a2), static_cast<int>(b2)}] =
                        germ.pairI.at({static_cast<int>(std::min(keep[a2], keep[b2])),
                                       static_cast<int>(std::max(keep[a2], keep[b2]))});
            rec.delta_by_component[ci] = germ_delta(restricted);
        }
        out.records.push_back(std::move(rec));
    }

    // genus bookkeeping
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        long long d = components[ci].degree();
        long long g = (d - 1) * (d - 2) / 2;
        for (const auto& r : out.records) {
            auto it = r.delta_by_component.find(static_cast<int>(ci));
            if (it != r.delta_by_component.end()) g -= r.point_count * it->second;
        }
        if (components[ci].param && g != 0)
            throw GenusMismatch("singularity_audit: parametrized component " + std::to_string(ci) +
                                " closes at genus " + std::to_string(g) + ", expected 0");
        if (g < 0)
            throw GenusMismatch("singularity_audit: negative genus for component " +
                                std::to_string(ci));
        out.genus.push_back(g);
    }

    // descriptor: group (tag, J) and count points
    std::map<std::pair<SingTypeTag, std::vector<int>>, int> grouped;
    for (const auto& r : out.records)
        grouped[{r.tag, r.component_set}] += r.point_count;
    for (const auto& [key, count] : grouped)
        out.descriptor.push_back(DescriptorEntry{key.first, key.second, count});
    std::sort(out.descriptor.begin(), out.descriptor.end());
    return out;
}

} // namespace rigidcurves
