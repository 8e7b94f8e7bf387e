#include "rigidcurves/germ.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rigidcurves/errors.hpp"
#include "rigidcurves/paramcurve.hpp"
#include "rigidcurves/points.hpp"

namespace rigidcurves {

namespace {

int igcd(int a, int b) { return std::gcd(a, b); }

} // namespace

long long SingTypeTag::delta() const {
    long long base = (static_cast<long long>(m) * n - m - n + igcd(m, n)) / 2;
    switch (dec) {
        case Decoration::None: return base;
        case Decoration::UpperM: return base + m;
        case Decoration::UpperN: return base + n;
        case Decoration::UpperMN: return base + m + n + 1;
    }
    return base;
}

int SingTypeTag::branch_count() const {
    int base = igcd(m, n);
    switch (dec) {
        case Decoration::None: return base;
        case Decoration::UpperM:
        case Decoration::UpperN: return base + 1;
        case Decoration::UpperMN: return base + 2;
    }
    return base;
}

std::string SingTypeTag::str() const {
    std::ostringstream os;
    if (m == 2 && dec == Decoration::None) {
        os << "A_" << (n - 1);
        return os.str();
    }
    os << "T(" << m << "," << n << ")";
    switch (dec) {
        case Decoration::None: break;
        case Decoration::UpperM: os << "^" << m; break;
        case Decoration::UpperN: os << "^" << n; break;
        case Decoration::UpperMN: os << "^{" << m << "," << n << "}"; break;
    }
    return os.str();
}

SingTypeTag tag_Tmn(int m, int n) {
    if (m < 2 || n < m) throw DegenerateInput("tag_Tmn: need 2 <= m <= n");
    return SingTypeTag{m, n, Decoration::None};
}

SingTypeTag tag_A(int k) {
    if (k < 1) throw DegenerateInput("tag_A: need k >= 1");
    return SingTypeTag{2, k + 1, Decoration::None};
}

SingTypeTag tag_ordinary(int m) {
    if (m < 2) throw DegenerateInput("tag_ordinary: need m >= 2");
    return SingTypeTag{m, m, Decoration::None};
}

SingTypeTag tag_decorated(int m, int n, Decoration dec) {
    if (dec == Decoration::None) return tag_Tmn(m, n);
    if (m < 1 || n <= m) throw DegenerateInput("tag_decorated: need 1 <= m < n");
    if (m == 1 && dec != Decoration::UpperMN)
        throw DegenerateInput("tag_decorated: m = 1 only with both lines");
    return SingTypeTag{m, n, dec};
}

SingTypeTag tag_from_string(const std::string& s) {
    if (s.rfind("A_", 0) == 0) {
        int k = std::stoi(s.substr(2));
        return tag_A(k);
    }
    if (s.rfind("T(", 0) == 0) {
        auto comma = s.find(',');
        auto close = s.find(')');
        if (comma == std::string::npos || close == std::string::npos)
            throw ParseError("tag_from_string: malformed tag " + s);
        int m = std::stoi(s.substr(2, comma - 2));
        int n = std::stoi(s.substr(comma + 1, close - comma - 1));
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return m == n ? tag_ordinary(m) : tag_Tmn(m, n);
        if (rest[0] != '^') throw ParseError("tag_from_string: malformed tag " + s);
        rest = rest.substr(1);
        if (!rest.empty() && rest[0] == '{') return tag_decorated(m, n, Decoration::UpperMN);
        int sup = std::stoi(rest);
        if (sup == m) return tag_decorated(m, n, Decoration::UpperM);
        if (sup == n) return tag_decorated(m, n, Decoration::UpperN);
        throw ParseError("tag_from_string: superscript matches neither m nor n in " + s);
    }
    throw ParseError("tag_from_string: unknown tag " + s);
}

long long delta_of_type(const SingTypeTag& tag) { return tag.delta(); }

std::vector<int> model_multiplicity_sequence(int m, int n) {
    if (igcd(m, n) != 1) throw DegenerateInput("model_multiplicity_sequence: m, n must be coprime");
    std::vector<int> seq;
    int a = m, b = n;
    while (a >= 2) {
        for (int i = 0; i < b / a; ++i) seq.push_back(a);
        int r = b % a;
        b = a;
        a = r;
    }
    return seq;
}

// ------------------------------------------------------------------
// implicit germ analysis

namespace {

using E = ExtScalar;
using BE = Biv<E>;

int germ_mult(const BE& f) {
    int m = -1;
    for (int j = 0; j <= f.degree(); ++j) {
        const Poly<E>& row = f[static_cast<std::size_t>(j)];
        int v = row.valuation();
        if (v < 0) continue;
        int tot = v + j;
        if (m < 0 || tot < m) m = tot;
    }
    return m;
}

int total_degree(const BE& f) {
    int d = -1;
    for (int j = 0; j <= f.degree(); ++j) {
        const Poly<E>& row = f[static_cast<std::size_t>(j)];
        if (!row.zero()) d = std::max(d, row.degree() + j);
    }
    return d;
}

// tangent-cone data: q(lambda) for directions y = lambda x, and the
// multiplicity k_v of the vertical direction x = 0
struct ConeData {
    ExtPoly q;
    int k_v = 0;
};

ConeData tangent_cone(const BE& f, int m) {
    ConeData out;
    std::vector<E> tc(static_cast<std::size_t>(m) + 1);  // tc[i] = coeff of x^i y^(m-i)
    for (int j = 0; j <= f.degree() && j <= m; ++j) {
        const Poly<E>& row = f[static_cast<std::size_t>(j)];
        int i = m - j;
        if (i <= row.degree()) tc[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i)];
    }
    int kv = 0;
    while (kv <= m && is_zero(tc[static_cast<std::size_t>(kv)])) ++kv;
    out.k_v = kv;
    std::vector<E> qc(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) qc[static_cast<std::size_t>(m - i)] = tc[static_cast<std::size_t>(i)];
    out.q = ExtPoly(std::move(qc));
    return out;
}

// f(x, x*(y + rho)) / x^m
BE blow_finite(const BE& f, const E& rho, int m) {
    BE h;
    for (int j = 0; j <= f.degree(); ++j) {
        Poly<E> row = f[static_cast<std::size_t>(j)];
        if (row.zero()) continue;
        h.set_coeff(static_cast<std::size_t>(j), row.shifted_up(static_cast<std::size_t>(j)));
    }
    // divide by x^m rowwise
    BE g;
    for (int j = 0; j <= h.degree(); ++j) {
        const Poly<E>& row = h[static_cast<std::size_t>(j)];
        if (row.zero()) continue;
        g.set_coeff(static_cast<std::size_t>(j), row.shifted_down(static_cast<std::size_t>(m)));
    }
    if (is_zero(rho)) return g;
    // outer shift y -> y + rho
    Poly<Poly<E>> shift_poly(std::vector<Poly<E>>{Poly<E>(rho), Poly<E>(E(1))});
    return g.compose(shift_poly);
}

// f(y*x, y) / y^m
BE blow_vertical(const BE& f, int m) {
    BE g;
    for (int j = 0; j <= f.degree(); ++j) {
        const Poly<E>& row = f[static_cast<std::size_t>(j)];
        for (int i = 0; i <= row.degree(); ++i) {
            const E& cf = row[static_cast<std::size_t>(i)];
            if (is_zero(cf)) continue;
            int newj = i + j - m;
            if (newj < 0) throw DegenerateInput("blow_vertical: term below multiplicity");
            Poly<E> inner = g[static_cast<std::size_t>(newj)];
            inner.set_coeff(static_cast<std::size_t>(i),
                            inner[static_cast<std::size_t>(i)] + cf);
            g.set_coeff(static_cast<std::size_t>(newj), inner);
        }
    }
    return g;
}

ExtPoly series_trunc(const ExtPoly& p, int n) { return p.truncated(static_cast<std::size_t>(n)); }

ExtPoly series_mul(const ExtPoly& a, const ExtPoly& b, int n) {
    return series_trunc(a * b, n);
}

// inverse of u mod x^n, u(0) != 0
ExtPoly series_inv(const ExtPoly& u, int n) {
    ExtPoly v(inv(u[0]));
    int prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        ExtPoly two(E(2));
        v = series_trunc(v * (two - series_trunc(u, prec) * v), prec);
    }
    return v;
}

// evaluate f(x, phi(x)) mod x^n
ExtPoly series_subst_y(const BE& f, const ExtPoly& phi, int n) {
    ExtPoly acc;
    for (int j = f.degree(); j >= 0; --j)
        acc = series_trunc(series_mul(acc, phi, n) + f[static_cast<std::size_t>(j)], n);
    return acc;
}

BE outer_derivative(const BE& f) {
    BE g;
    for (int j = 1; j <= f.degree(); ++j)
        g.set_coeff(static_cast<std::size_t>(j - 1),
                    Poly<E>(E(static_cast<long>(j))) * f[static_cast<std::size_t>(j)]);
    return g;
}

// contact of the smooth germ f (mult 1) with the line a x + b y = 0 through
// the origin. Returns kContactInfinite when the line divides f.
int smooth_line_contact(const BE& f, const E& a, const E& b) {
    // ensure we can solve y = phi(x): need f_y(0,0) != 0; if not, swap roles
    const BE* g = &f;
    BE swapped;
    E la = a, lb = b;
    E fy0 = f.degree() >= 1 ? f[1][0] : E(0);
    if (is_zero(fy0)) {
        swapped = biv_swap_xy(f);
        g = &swapped;
        std::swap(la, lb);
        fy0 = swapped.degree() >= 1 ? swapped[1][0] : E(0);
        if (is_zero(fy0)) throw UnsupportedGerm("smooth_line_contact: germ not smooth");
    }
    int cap = total_degree(*g) + 2;
    int prec = 2;
    ExtPoly phi;  // phi(0) = 0
    while (true) {
        prec = std::min(prec * 2, cap + 2);
        // Newton: phi -= f(x, phi) / f_y(x, phi)
        for (int it = 0; it < 2 * cap + 4; ++it) {
            ExtPoly val = series_subst_y(*g, phi, prec);
            if (val.zero()) break;
            ExtPoly der = series_subst_y(outer_derivative(*g), phi, prec);
            ExtPoly corr = series_mul(val, series_inv(der, prec), prec);
            if (corr.zero()) break;
            phi = series_trunc(phi - corr, prec);
            if (val.valuation() >= prec) break;
        }
        ExtPoly along = series_trunc(ExtPoly(std::vector<E>{E(0), la}) + lb * phi, prec);
        int v = along.valuation();
        if (v >= 0 && v < prec - 1) return v;
        if (prec >= cap + 2) {
            // deeper than the degree allows: the line is a factor
            return kContactInfinite;
        }
    }
}

constexpr int kMaxDepth = 64;

LocalGerm analyze_rec(const BE& f, int depth);

// handles one repeated direction: blow up, recurse, and lift the branches
void lift_subcall(const BE& g, bool vertical, const E& rho, int depth, LocalGerm& out,
                  std::vector<int>& entry_of_sub, LocalGerm& sub) {
    sub = analyze_rec(g, depth + 1);
    for (std::size_t s = 0; s < sub.branches.size(); ++s) {
        const LocalBranch& sb = sub.branches[s];
        // exceptional line in the subchart: {x = 0} for the finite chart,
        // {y = 0} for the vertical chart
        bool tangent_to_E;
        if (!sb.dir_known) {
            tangent_to_E = false;
        } else if (!vertical) {
            tangent_to_E = !is_zero(sb.dir_a) && is_zero(sb.dir_b);
        } else {
            tangent_to_E = is_zero(sb.dir_a) && !is_zero(sb.dir_b);
        }
        int m_par;
        if (!tangent_to_E) {
            m_par = sb.e;
        } else {
            if (sb.c == kUnknownContact || sb.c == kContactInfinite)
                throw UnsupportedGerm("analyze_implicit_germ: exceptional tangency with unknown contact");
            m_par = sb.c;
        }
        // the other coordinate line of the subchart enters the contact of the
        // lifted branch with its own tangent
        bool tangent_to_other;
        if (!sb.dir_known) {
            tangent_to_other = false;
        } else if (!vertical) {
            tangent_to_other = is_zero(sb.dir_a) && !is_zero(sb.dir_b);
        } else {
            tangent_to_other = !is_zero(sb.dir_a) && is_zero(sb.dir_b);
        }
        int i_other;
        if (!tangent_to_other) i_other = sb.e;
        else {
            if (sb.c == kUnknownContact || sb.c == kContactInfinite)
                throw UnsupportedGerm("analyze_implicit_germ: coordinate tangency with unknown contact");
            i_other = sb.c;
        }

        LocalBranch nb;
        nb.count = sb.count;
        nb.e = std::max(m_par, 1);
        nb.smooth = nb.e == 1;
        nb.c = m_par + i_other;
        if (m_par >= 2) {
            nb.multseq.push_back(m_par);
            nb.multseq.insert(nb.multseq.end(), sb.multseq.begin(), sb.multseq.end());
        }
        for (int mm : nb.multseq) nb.delta += static_cast<long long>(mm) * (mm - 1) / 2;
        nb.dir_known = true;
        if (!vertical) {
            nb.dir_a = -rho;  // line y = rho x: -rho*x + y
            nb.dir_b = E(1);
        } else {
            nb.dir_a = E(1);
            nb.dir_b = E(0);
        }
        nb.within_pair = static_cast<long long>(m_par) * m_par + sb.within_pair;
        entry_of_sub.push_back(static_cast<int>(out.branches.size()));
        out.branches.push_back(std::move(nb));
    }
}

LocalGerm analyze_rec(const BE& f, int depth) {
    if (depth > kMaxDepth) throw UnsupportedGerm("analyze_implicit_germ: depth budget exceeded");
    LocalGerm out;
    int m = germ_mult(f);
    if (m < 0) throw ZeroInput("analyze_implicit_germ: zero germ");
    if (m == 0) throw DegenerateInput("analyze_implicit_germ: germ does not pass through the origin");
    out.mult = m;
    if (m == 1) {
        LocalBranch b;
        b.count = 1;
        b.smooth = true;
        b.e = 1;
        // tangent from the linear part
        E a = f.degree() >= 0 && f[0].degree() >= 1 ? f[0][1] : E(0);
        E bb = f.degree() >= 1 ? f[1][0] : E(0);
        b.dir_a = a;
        b.dir_b = bb;
        b.dir_known = true;
        b.c = smooth_line_contact(f, a, bb);
        out.branches.push_back(std::move(b));
        out.delta = 0;
        return out;
    }

    ConeData cone = tangent_cone(f, m);
    // repeated finite directions must be rational over the working field
    ExtPoly q = cone.q;
    std::vector<std::pair<E, int>> finite_dirs;  // (rho, multiplicity in cone)
    int covered = 0;
    std::vector<E> simple_rational_dirs;
    if (q.degree() >= 1) {
        FieldRoots fr = ext_roots_in_field(q);
        for (const auto& [rho, mult] : fr.roots) {
            if (mult >= 2) finite_dirs.emplace_back(rho, mult);
            else simple_rational_dirs.push_back(rho);
            covered += mult;
        }
        if (fr.leftover_degree > 0) {
            // leftover must be squarefree (only simple irrational directions)
            ExtPoly cof = q;
            for (const auto& [rho, mult] : fr.roots) {
                ExtPoly lin(std::vector<E>{-rho, E(1)});
                for (int i = 0; i < mult; ++i) cof = exact_div(cof, lin);
            }
            ExtPoly gg = ext_gcd(cof, cof.derivative());
            if (gg.degree() > 0)
                throw UnsupportedGerm(
                    "analyze_implicit_germ: repeated tangent direction outside the working field");
        }
    }
    int leftover_block = q.degree() >= 1 ? q.degree() - covered : 0;

    std::vector<std::size_t> simple_entries;
    for (const E& rho : simple_rational_dirs) {
        LocalBranch b;
        b.count = 1;
        b.smooth = true;
        b.e = 1;
        b.c = kUnknownContact;
        b.dir_a = -rho;
        b.dir_b = E(1);
        b.dir_known = true;
        simple_entries.push_back(out.branches.size());
        out.branches.push_back(std::move(b));
    }
    if (leftover_block > 0) {
        LocalBranch b;
        b.count = leftover_block;
        b.smooth = true;
        b.e = 1;
        b.c = kUnknownContact;
        b.dir_known = false;
        b.within_pair = 1;
        simple_entries.push_back(out.branches.size());
        out.branches.push_back(std::move(b));
    }
    if (cone.k_v == 1) {
        LocalBranch b;
        b.count = 1;
        b.smooth = true;
        b.e = 1;
        b.c = kUnknownContact;
        b.dir_a = E(1);
        b.dir_b = E(0);
        b.dir_known = true;
        simple_entries.push_back(out.branches.size());
        out.branches.push_back(std::move(b));
    }

    long long delta_children = 0;
    struct SubInfo {
        std::vector<int> entries;
        LocalGerm germ;
    };
    std::vector<SubInfo> subs;

    for (const auto& [rho, mult] : finite_dirs) {
        (void)mult;
        BE g = blow_finite(f, rho, m);
        SubInfo info;
        lift_subcall(g, false, rho, depth, out, info.entries, info.germ);
        delta_children += info.germ.delta;
        subs.push_back(std::move(info));
    }
    if (cone.k_v >= 2) {
        BE g = blow_vertical(f, m);
        SubInfo info;
        lift_subcall(g, true, E(0), depth, out, info.entries, info.germ);
        delta_children += info.germ.delta;
        subs.push_back(std::move(info));
    }

    // pairwise intersections
    auto mult_at_here = [&](std::size_t idx) -> long long {
        return out.branches[idx].smooth ? 1 : out.branches[idx].multseq.front();
    };
    for (std::size_t i = 0; i < out.branches.size(); ++i) {
        for (std::size_t j = i + 1; j < out.branches.size(); ++j) {
            long long base = mult_at_here(i) * mult_at_here(j);
            long long deeper = 0;
            for (const auto& s : subs) {
                auto ii = std::find(s.entries.begin(), s.entries.end(), static_cast<int>(i));
                auto jj = std::find(s.entries.begin(), s.entries.end(), static_cast<int>(j));
                if (ii != s.entries.end() && jj != s.entries.end()) {
                    int si = static_cast<int>(ii - s.entries.begin());
                    int sj = static_cast<int>(jj - s.entries.begin());
                    auto key = std::make_pair(std::min(si, sj), std::max(si, sj));
                    auto it = s.germ.pairI.find(key);
                    if (it != s.germ.pairI.end()) deeper = it->second;
                }
            }
            out.pairI[{static_cast<int>(i), static_cast<int>(j)}] = base + deeper;
        }
    }

    out.delta = static_cast<long long>(m) * (m - 1) / 2 + delta_children;

    // consistency: delta from branch data must agree
    long long check = 0;
    for (const auto& b : out.branches) {
        check += static_cast<long long>(b.count) * b.delta;
        if (b.count >= 2) check += static_cast<long long>(b.count) * (b.count - 1) / 2 * b.within_pair;
    }
    for (std::size_t i = 0; i < out.branches.size(); ++i)
        for (std::size_t j = i + 1; j < out.branches.size(); ++j)
            check += static_cast<long long>(out.branches[i].count) * out.branches[j].count *
                     out.pairI.at({static_cast<int>(i), static_cast<int>(j)});
    if (check != out.delta)
        throw UnsupportedGerm("analyze_implicit_germ: inconsistent local bookkeeping");
    return out;
}

} // namespace

LocalGerm analyze_implicit_germ(const Biv<ExtScalar>& f) { return analyze_rec(f, 0); }

// ------------------------------------------------------------------
// classification

long long germ_delta(const GermInput& in) {
    long long d = 0;
    for (const auto& b : in.branches) {
        d += static_cast<long long>(b.count) * b.delta;
        if (b.count >= 2) d += static_cast<long long>(b.count) * (b.count - 1) / 2 * b.within_pair;
    }
    for (std::size_t i = 0; i < in.branches.size(); ++i)
        for (std::size_t j = i + 1; j < in.branches.size(); ++j) {
            auto it = in.pairI.find({static_cast<int>(i), static_cast<int>(j)});
            if (it == in.pairI.end()) throw UnsupportedGerm("germ_delta: missing pairwise data");
            d += static_cast<long long>(in.branches[i].count) * in.branches[j].count * it->second;
        }
    return d;
}

namespace {

std::string describe(const GermInput& in) {
    std::ostringstream os;
    os << "[";
    for (const auto& b : in.branches)
        os << " (count=" << b.count << " e=" << b.e << " c=" << b.c << " line=" << b.is_line << ")";
    os << " ]";
    return os.str();
}

} // namespace

SingTypeTag classify_germ(const GermInput& in) {
    int total = 0;
    std::vector<std::size_t> singular;
    for (std::size_t i = 0; i < in.branches.size(); ++i) {
        total += in.branches[i].count;
        if (in.branches[i].e >= 2) singular.push_back(i);
    }
    if (total <= 0) throw UnsupportedGerm("classify_germ: no branches");

    auto pair_of = [&](std::size_t i, std::size_t j) -> long long {
        auto it = in.pairI.find({static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))});
        if (it == in.pairI.end()) throw UnsupportedGerm("classify_germ: missing pairwise data");
        return it->second;
    };

    SingTypeTag tag;
    if (singular.empty()) {
        if (total == 1) throw UnsupportedGerm("classify_germ: smooth point, nothing to classify");
        if (total == 2) {
            long long k;
            if (in.branches.size() == 1) k = in.branches[0].within_pair;
            else k = pair_of(0, 1);
            if (k < 1) throw UnsupportedGerm("classify_germ: nonpositive contact");
            tag = k == 1 ? tag_ordinary(2) : tag_Tmn(2, static_cast<int>(2 * k));
        } else {
            // ordinary point, or a smooth branch with both decorating lines
            bool all_transverse = true;
            long long special = 0;
            std::size_t si = 0, sj = 0;
            for (std::size_t i = 0; i < in.branches.size() && all_transverse; ++i) {
                if (in.branches[i].count >= 2 && in.branches[i].within_pair != 1) {
                    all_transverse = false;
                    special = -1;
                }
                for (std::size_t j = i + 1; j < in.branches.size(); ++j) {
                    long long v = pair_of(i, j);
                    if (v != 1) {
                        if (special != 0) { special = -1; all_transverse = false; break; }
                        special = v;
                        si = i;
                        sj = j;
                    }
                }
            }
            if (all_transverse && special == 0) {
                tag = tag_ordinary(total);
            } else if (special > 1 && total == 3 && in.branches.size() == 3) {
                // smooth branch + tangent line + transverse line
                bool line_involved = in.branches[si].is_line || in.branches[sj].is_line;
                if (!line_involved)
                    throw UnsupportedGerm("classify_germ: tangential triple without a line " + describe(in));
                tag = tag_decorated(1, static_cast<int>(special), Decoration::UpperMN);
            } else {
                throw UnsupportedGerm("classify_germ: unsupported smooth-branch pattern " + describe(in));
            }
        }
    } else if (singular.size() == 1 && in.branches[singular[0]].count == 1) {
        const GermBranchSummary& B = in.branches[singular[0]];
        int e = B.e, c = B.c;
        if (c <= e || igcd(e, c) != 1)
            throw UnsupportedGerm("classify_germ: branch data outside the supported list " + describe(in));
        if (B.multseq != model_multiplicity_sequence(e, c))
            throw UnsupportedGerm("classify_germ: multiplicity sequence mismatch " + describe(in));
        if (B.delta != static_cast<long long>(e - 1) * (c - 1) / 2)
            throw UnsupportedGerm("classify_germ: branch delta mismatch " + describe(in));
        std::vector<std::size_t> others;
        int others_total = 0;
        for (std::size_t i = 0; i < in.branches.size(); ++i)
            if (i != singular[0]) {
                others.push_back(i);
                others_total += in.branches[i].count;
            }
        if (others_total == 0) {
            tag = tag_Tmn(e, c);
        } else if (others_total == 1) {
            long long v = pair_of(singular[0], others[0]);
            if (v == e) tag = tag_decorated(e, c, Decoration::UpperM);
            else if (v == c) tag = tag_decorated(e, c, Decoration::UpperN);
            else throw UnsupportedGerm("classify_germ: decorated contact matches neither m nor n");
        } else if (others_total == 2 && others.size() == 2) {
            long long v1 = pair_of(singular[0], others[0]);
            long long v2 = pair_of(singular[0], others[1]);
            long long vl = pair_of(others[0], others[1]);
            if (vl != 1) throw UnsupportedGerm("classify_germ: decorating lines not transverse");
            if ((v1 == e && v2 == c) || (v1 == c && v2 == e))
                tag = tag_decorated(e, c, Decoration::UpperMN);
            else throw UnsupportedGerm("classify_germ: decorated contacts do not match {m, n}");
        } else {
            throw UnsupportedGerm("classify_germ: too many branches around one singular branch " +
                                  describe(in));
        }
    } else {
        throw UnsupportedGerm("classify_germ: several singular branches at one point " + describe(in));
    }

    if (germ_delta(in) != tag.delta())
        throw UnsupportedGerm("classify_germ: delta bookkeeping contradicts tag " + tag.str() +
                              " at " + describe(in));
    return tag;
}

} // namespace rigidcurves
