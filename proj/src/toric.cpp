#include "torica/toric.hpp"

#include <algorithm>
#include <sstream>

#include "torica/errors.hpp"

namespace torica {

ClassElement ClassGroup::degree(const IntVec& coeffs) const {
    if (static_cast<int>(coeffs.size()) != num_rays)
        fail(Errc::InvalidArgument, "coefficient vector size mismatch");
    IntVec y = u.apply(coeffs);
    IntVec free(y.begin() + rank, y.end());
    IntVec residues;
    for (int i = 0; i < rank; ++i)
        if (divisors[i] >= 2) residues.push_back(y[i]);
    return ge_make(GradedGroup{free_rank, torsion}, std::move(free), std::move(residues));
}

RatVec ClassGroup::degree_free(const RatVec& coeffs) const {
    if (static_cast<int>(coeffs.size()) != num_rays)
        fail(Errc::InvalidArgument, "coefficient vector size mismatch");
    RatVec y(free_rank, Rat(0));
    for (int i = 0; i < free_rank; ++i)
        for (int j = 0; j < num_rays; ++j) y[i] += Rat(u.at(rank + i, j)) * coeffs[j];
    return y;
}

ClassGroup class_group(const Fan& f) {
    const int n = static_cast<int>(f.rays.size());
    IntMatrix ray_matrix = IntMatrix::from_rows(f.rays);  // rows = rays, maps m -> (<m, u_i>)_i
    SmithDecomposition snf = smith_normal_form(ray_matrix);
    int rk = 0;
    for (const Int& e : snf.elementary_divisors)
        if (e != 0) ++rk;
    if (rk != f.dim) fail(Errc::RaysDoNotSpan, "rays do not span the ambient lattice over Q");

    ClassGroup cg;
    cg.num_rays = n;
    cg.rank = rk;
    cg.free_rank = n - rk;
    cg.u = snf.u;
    cg.divisors = snf.elementary_divisors;
    for (const Int& e : snf.elementary_divisors)
        if (e >= 2) cg.torsion.push_back(e);
    return cg;
}

InvariantDivisor canonical_divisor(const Fan& f) {
    return InvariantDivisor{RatVec(f.rays.size(), Rat(-1))};
}

InvariantDivisor principal_divisor(const Fan& f, const IntVec& m) {
    RatVec c;
    c.reserve(f.rays.size());
    for (const IntVec& u : f.rays) c.emplace_back(dot(m, u));
    return InvariantDivisor{c};
}

ClassElement divisor_class(const Fan& f, const ClassGroup& cg, const InvariantDivisor& d) {
    if (d.coeffs.size() != f.rays.size()) fail(Errc::InvalidArgument, "divisor size mismatch");
    IntVec z(d.coeffs.size());
    for (size_t i = 0; i < d.coeffs.size(); ++i) {
        if (!is_integer(d.coeffs[i]))
            fail(Errc::NonIntegral, "divisor coefficient " + to_string(d.coeffs[i]) +
                                        " is not an integer");
        z[i] = d.coeffs[i].get_num();
    }
    return cg.degree(z);
}

std::optional<SupportFunction> support_function(const Fan& f, const InvariantDivisor& d) {
    if (d.coeffs.size() != f.rays.size()) fail(Errc::InvalidArgument, "divisor size mismatch");
    SupportFunction sf;
    for (const Cone& c : f.max_cones) {
        IntMatrix rows = IntMatrix::from_rows(f.cone_rays(c));
        RatVec rhs;
        rhs.reserve(c.ray_indices.size());
        for (int i : c.ray_indices) rhs.push_back(-d.coeffs[i]);
        auto m = solve_rational(rows, rhs);
        if (!m) return std::nullopt;  // some cone's system is unsolvable: not Q-Cartier
        sf.covectors.push_back(std::move(*m));
    }
    // The value on a shared face is pinned by the common rays; verify the two
    // covectors agree there.
    for (size_t a = 0; a < f.max_cones.size(); ++a)
        for (size_t b = a + 1; b < f.max_cones.size(); ++b)
            for (int i : f.max_cones[a].ray_indices)
                if (std::binary_search(f.max_cones[b].ray_indices.begin(),
                                       f.max_cones[b].ray_indices.end(), i))
                    if (dot(sf.covectors[a], f.rays[i]) != dot(sf.covectors[b], f.rays[i]))
                        return std::nullopt;
    return sf;
}

Rat evaluate(const Fan& f, const SupportFunction& sf, const IntVec& x) {
    int k = f.find_containing_cone(x);
    if (k < 0) fail(Errc::OutsideSupport, "point outside the support of the fan");
    return dot(sf.covectors[k], x);
}

namespace {

bool require_complete(const Fan& f) {
    try {
        return is_complete(f);
    } catch (const Error& e) {
        if (e.code() == Errc::NotPure) return false;
        throw;
    }
}

// Shared by is_nef / is_ample. With <m_sigma, u_i> = -b_i on sigma's rays, the
// divisor is nef iff <m_sigma, u_j> >= -b_j for every cone sigma and every ray
// u_j (degree of D on the invariant curve of a wall), ample iff strict for
// rays outside sigma and the covectors are pairwise distinct.
SupportFunction positivity_preamble(const Fan& f, const InvariantDivisor& d) {
    if (!require_complete(f)) fail(Errc::NotComplete, "positivity tests require a complete fan");
    auto sf = support_function(f, d);
    if (!sf) fail(Errc::NotQCartier, "divisor is not Q-Cartier");
    return *sf;
}

}  // namespace

bool is_nef(const Fan& f, const InvariantDivisor& d) {
    SupportFunction sf = positivity_preamble(f, d);
    for (size_t k = 0; k < f.max_cones.size(); ++k)
        for (size_t j = 0; j < f.rays.size(); ++j)
            if (dot(sf.covectors[k], f.rays[j]) < -d.coeffs[j]) return false;
    return true;
}

bool is_ample(const Fan& f, const InvariantDivisor& d) {
    SupportFunction sf = positivity_preamble(f, d);
    for (size_t k = 0; k < f.max_cones.size(); ++k) {
        for (size_t j = 0; j < f.rays.size(); ++j) {
            if (std::binary_search(f.max_cones[k].ray_indices.begin(),
                                   f.max_cones[k].ray_indices.end(), static_cast<int>(j)))
                continue;
            if (dot(sf.covectors[k], f.rays[j]) <= -d.coeffs[j]) return false;
        }
        for (size_t l = k + 1; l < f.max_cones.size(); ++l)
            if (sf.covectors[k] == sf.covectors[l]) return false;
    }
    return true;
}

Rat log_discrepancy(const Fan& f, const InvariantDivisor& delta, const IntVec& v) {
    if (!is_simplicial(f)) fail(Errc::NotSimplicial, "log discrepancy needs a simplicial fan");
    if (delta.coeffs.size() != f.rays.size()) fail(Errc::InvalidArgument, "divisor size mismatch");
    for (const Cone& c : f.max_cones) {
        IntMatrix cols = IntMatrix::from_columns(f.cone_rays(c));
        RatVec rhs(v.size());
        for (size_t i = 0; i < v.size(); ++i) rhs[i] = Rat(v[i]);
        auto coeffs = solve_rational(cols, rhs);
        if (!coeffs) continue;
        bool inside = true;
        for (const Rat& ci : *coeffs)
            if (ci < 0) {
                inside = false;
                break;
            }
        if (!inside) continue;
        Rat total = 0;
        for (size_t j = 0; j < coeffs->size(); ++j)
            total += (*coeffs)[j] * (Rat(1) - delta.coeffs[c.ray_indices[j]]);
        return total;
    }
    fail(Errc::OutsideSupport, "point lies outside the support of the fan");
}

bool lc_check_invariant(const Fan& f, const InvariantDivisor& delta) {
    if (!is_simplicial(f)) fail(Errc::NotSimplicial, "lc check needs a simplicial fan");
    for (const Rat& a : delta.coeffs)
        if (a > 1) return false;
    return true;
}

std::optional<InvariantDivisor> find_ample(const Fan& f, const std::vector<int>& forced_zero) {
    const int n = static_cast<int>(f.rays.size());
    if (n == 0) return InvariantDivisor{{}};  // fan of a point: trivially ample
    std::vector<char> forced(n, 0);
    for (int i : forced_zero) forced[i] = 1;
    std::vector<int> free_pos;
    for (int i = 0; i < n; ++i)
        if (!forced[i]) free_pos.push_back(i);

    constexpr long kCandidateCap = 1 << 22;
    for (int bound = 1; bound <= 8; bound *= 2) {
        std::vector<int> odo(free_pos.size(), 0);
        long tried = 0;
        for (;;) {
            if (++tried > kCandidateCap) break;
            InvariantDivisor d{RatVec(n, Rat(0))};
            for (size_t i = 0; i < free_pos.size(); ++i) d.coeffs[free_pos[i]] = odo[i];
            if (is_ample(f, d)) return d;
            // next vector in lexicographic order (leftmost significant)
            int i = static_cast<int>(odo.size()) - 1;
            while (i >= 0 && odo[i] == bound) odo[i--] = 0;
            if (i < 0) break;
            ++odo[i];
        }
    }
    return std::nullopt;
}

LiftResult lift_from_invariant_subvariety(const Fan& f, const Cone& sigma, int rho) {
    if (rho < 0 || rho >= static_cast<int>(f.rays.size()))
        fail(Errc::InvalidArgument, "ray index out of range");
    if (!is_simplicial(f)) fail(Errc::NotSimplicial, "lift requires a simplicial fan");
    if (!require_complete(f)) fail(Errc::NotComplete, "lift requires a complete fan");
    if (!find_ample(f, {})) fail(Errc::NotProjective, "no strictly convex support function found");

    LiftResult out;
    out.quotient = star_quotient_full(f, sigma);
    const Fan& qf = out.quotient.fan;

    // W = invariant subset of V given by the smallest cone of the quotient fan
    // containing the image of rho; divisors of V containing W are exactly the
    // rays of that cone.
    IntVec img = out.quotient.projection.apply(f.rays[rho]);
    if (!is_zero(img)) {
        IntVec r = primitive(img);
        int k = qf.find_containing_cone(r);
        if (k < 0) fail(Errc::ConeNotInFan, "image of rho escapes the quotient fan");
        IntVec m(qf.dim, Int(0));
        for (const IntVec& w : qf.duals[k].rays)
            if (dot(w, r) == 0) m = vec_comb(Int(1), m, Int(1), w);
        for (int i : qf.max_cones[k].ray_indices)
            if (dot(m, qf.rays[i]) == 0) out.w_rays.push_back(i);
    }

    auto ample = find_ample(qf, out.w_rays);
    if (!ample)
        fail(Errc::NoAmpleAvoidingW,
             "bounded search found no ample divisor avoiding the divisors through W");
    out.a = *ample;

    auto ha = support_function(qf, out.a);
    if (!ha) fail(Errc::NotQCartier, "ample divisor on the quotient is not Q-Cartier");

    // b_i = g(u_i) with g = -h_A after projection; h_A <= 0 since A >= 0.
    out.b.coeffs.resize(f.rays.size());
    for (size_t i = 0; i < f.rays.size(); ++i)
        out.b.coeffs[i] = -evaluate(qf, *ha, out.quotient.projection.apply(f.rays[i]));

    // Postconditions of the lifting lemma, checked rather than trusted.
    for (const Rat& b : out.b.coeffs)
        if (b < 0) fail(Errc::LiftPostconditionViolated, "B has a negative coefficient");
    for (int i : sigma.ray_indices)
        if (out.b.coeffs[i] != 0)
            fail(Errc::LiftPostconditionViolated, "a component of B contains V");
    if (out.b.coeffs[rho] != 0) fail(Errc::LiftPostconditionViolated, "B meets the fixed divisor");
    // B|_V = A: on every ray of f sitting in a cone around sigma, the stored
    // coefficient must match the ample coefficient of its image ray, scaled by
    // the lattice index of the projection.
    for (int k : out.quotient.containing_cones)
        for (int i : f.max_cones[k].ray_indices) {
            IntVec pi = out.quotient.projection.apply(f.rays[i]);
            if (is_zero(pi)) continue;
            IntVec prim = primitive(pi);
            auto it = std::find(qf.rays.begin(), qf.rays.end(), prim);
            if (it == qf.rays.end())
                fail(Errc::LiftPostconditionViolated, "projected ray missing from quotient fan");
            size_t idx = static_cast<size_t>(it - qf.rays.begin());
            Int lambda = 0;
            for (size_t j = 0; j < pi.size(); ++j)
                if (prim[j] != 0) {
                    lambda = pi[j] / prim[j];
                    break;
                }
            if (pi.empty()) lambda = 1;
            if (out.b.coeffs[i] != Rat(lambda) * out.a.coeffs[idx])
                fail(Errc::LiftPostconditionViolated, "B does not restrict to A on V");
        }
    return out;
}

GradedPresentation cox_presentation(const Fan& f) {
    ClassGroup cg = class_group(f);
    GradedPresentation p;
    p.group = cg.group();
    for (size_t i = 0; i < f.rays.size(); ++i) {
        IntVec e(f.rays.size(), Int(0));
        e[i] = 1;
        p.variables.push_back({"x" + std::to_string(i), cg.degree(e)});
    }
    p.relation = Polynomial::zero(p.nvars());
    return p;
}

InvariantDivisor parse_divisor_file(const std::string& text, const Fan& f) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool started = false;
    RatVec coeffs;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (!started) {
                if (tok != "divisor:")
                    fail(Errc::SyntaxError,
                         "line " + std::to_string(lineno) + ": expected 'divisor:'");
                started = true;
                continue;
            }
            auto q = parse_rational(tok);
            if (!q)
                fail(Errc::SyntaxError,
                     "line " + std::to_string(lineno) + ": bad rational '" + tok + "'");
            coeffs.push_back(*q);
        }
    }
    if (!started) fail(Errc::SyntaxError, "missing 'divisor:' header");
    if (coeffs.size() != f.rays.size())
        fail(Errc::SyntaxError, "divisor has " + std::to_string(coeffs.size()) +
                                    " coefficients, fan has " + std::to_string(f.rays.size()) +
                                    " rays");
    return InvariantDivisor{std::move(coeffs)};
}

std::string serialize_divisor(const InvariantDivisor& d) {
    std::ostringstream os;
    os << "divisor: " << to_string(d.coeffs) << "\n";
    return os.str();
}

}  // namespace torica
