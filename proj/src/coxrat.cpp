#include "torica/coxrat.hpp"

#include <algorithm>
#include <sstream>

#include "torica/complexity.hpp"
#include "torica/errors.hpp"
#include "torica/int_matrix.hpp"

namespace torica {

int quadratic_rank(const Polynomial& q) {
    const int n = q.nvars;
    std::vector<RatVec> sym(n, RatVec(n, Rat(0)));
    for (const auto& [e, c] : degree_part(q, 2).terms) {
        int first = -1, second = -1;
        for (int k = 0; k < n; ++k) {
            if (e[k] == 2) first = second = k;
            if (e[k] == 1) (first < 0 ? first : second) = k;
        }
        if (first == second) {
            sym[first][first] = c;
        } else {
            sym[first][second] = c / 2;
            sym[second][first] = c / 2;
        }
    }
    return rational_rank(sym);
}

GermClass classify_germ(const Polynomial& q) {
    if (q.coeff(Exponents(q.nvars, 0)) != 0)
        fail(Errc::NonzeroConstantTerm, "germ classification needs Q(0) = 0");
    if (!degree_part(q, 1).is_zero()) return GermClass::Smooth;
    if (quadratic_rank(q) >= 2) return GermClass::cA;
    return GermClass::NotCA;
}

std::optional<std::pair<int, int>> find_cross_term(const Polynomial& q) {
    std::optional<std::pair<int, int>> best;
    for (const auto& [e, c] : q.terms) {
        int first = -1, second = -1;
        bool cross = true;
        int total = 0;
        for (int k = 0; k < q.nvars; ++k) {
            total += e[k];
            if (e[k] == 0) continue;
            if (e[k] != 1) {
                cross = false;
                break;
            }
            (first < 0 ? first : second) = k;
        }
        if (!cross || total != 2 || second < 0) continue;
        std::pair<int, int> p{std::min(first, second), std::max(first, second)};
        if (!best || p < *best) best = p;
    }
    return best;
}

NormalForm eliminate_to_normal_form(const GradedPresentation& p, const Polynomial& q0, int i,
                                    int j) {
    Exponents cross(q0.nvars, 0);
    cross[i] = 1;
    cross[j] = 1;
    if (q0.coeff(cross) == 0) fail(Errc::InvalidArgument, "x_i x_j is not a monomial of Q");

    NormalForm out;
    Polynomial q = q0;
    const int max_iter = q0.total_degree() + 1;
    for (int iter = 0; iter < max_iter; ++iter) {
        Rat c = q.coeff(cross);
        if (c == 0) break;  // cross term lost: stalled
        q = (1 / c) * q;

        // q = x_i (x_j + q0) + q1 with q1 free of x_i.
        Polynomial r = divide_out(q, i);
        Polynomial head = r - Polynomial::variable(q.nvars, j);
        if (head.is_zero()) {
            out.q = Rat(-1) * free_of(q, i);
            out.normal = q;
            return out;
        }
        // Eligible part of the substitution: terms free of x_j (so that
        // x_j := x_j - h is invertible).
        Polynomial h = free_of(head, j);
        if (h.is_zero()) break;  // everything left involves x_j: no progress possible

        Polynomial replacement = Polynomial::variable(q.nvars, j) - h;
        // Degree bookkeeping: h is homogeneous of the degree of x_j whenever Q
        // is homogeneous.
        auto hd = homogeneous_degree(p, h);
        if (!hd || !(*hd == p.variables[j].degree))
            fail(Errc::EliminationStalled, "substitution is not degree-preserving");
        q = substitute(q, j, replacement);
        out.substitutions.push_back({j, replacement});
    }
    fail(Errc::EliminationStalled,
         "normal form not reached within total-degree(Q) substitutions");
}

MuData build_mu(const GradedPresentation& p, const Polynomial& q, int i, int j) {
    if (q.is_zero()) fail(Errc::ZeroQ, "q = 0: the relation x_i x_j is reducible");
    MuData out;
    out.nu = q.terms.begin()->first;  // lexicographically first monomial
    out.mu.assign(q.nvars, Int(0));
    out.mu[i] += 1;
    out.mu[j] += 1;
    for (int k = 0; k < q.nvars; ++k) out.mu[k] -= out.nu[k];

    if (!ge_is_zero(multidegree(p, out.mu)))
        fail(Errc::InvalidArgument, "mu is not of multidegree zero");
    if (out.mu[i] != 1) fail(Errc::InvalidArgument, "mu lacks the unit x_i coordinate");
    return out;
}

namespace {

// Primitivity of mu inside the kernel lattice M of the grading map. Only
// attempted for torsion-free gradings, where M is the integer kernel of the
// free degree matrix; with torsion the right lattice needs the congruences
// too, and we leave the flag unchecked.
void check_mu_primitivity(const GradedPresentation& p, RationalityCertificate& cert) {
    if (!p.group.torsion.empty()) return;
    const int n = p.nvars();
    IntMatrix degs(p.group.free_rank, n);
    for (int v = 0; v < n; ++v)
        for (int r = 0; r < p.group.free_rank; ++r) degs.at(r, v) = p.variables[v].degree.free[r];
    std::vector<IntVec> basis = kernel_basis(degs);
    if (basis.empty()) return;
    // Solve mu = x . basis over Z and test gcd(x) = 1.
    IntMatrix b = IntMatrix::from_columns(basis);
    auto x = solve_integer(b, cert.mu->mu);
    cert.mu_primitivity_checked = true;
    cert.mu_primitive_in_m = x && vec_gcd(*x) == 1;
}

RationalityCertificate cross_term_route(const GradedPresentation& p, const Polynomial& q, int i,
                                        int j, RationalityCertificate cert) {
    try {
        NormalForm nf = eliminate_to_normal_form(p, q, i, j);
        cert.cross_pair = {i, j};
        for (Substitution& s : nf.substitutions) cert.substitutions.push_back(std::move(s));
        cert.normal_form = nf.normal;
        cert.mu = build_mu(p, nf.q, i, j);
        cert.verdict = Verdict::Rational;
        check_mu_primitivity(p, cert);
        return cert;
    } catch (const Error& e) {
        if (e.code() == Errc::EliminationStalled || e.code() == Errc::ZeroQ) {
            cert.verdict = Verdict::Inconclusive;
            cert.reason = e.code() == Errc::ZeroQ
                              ? "reducible relation: q vanishes after elimination"
                              : std::string("elimination stalled: ") + e.what();
            return cert;
        }
        throw;
    }
}

}  // namespace

RationalityCertificate rationality_certificate(const GradedPresentation& p) {
    if (!validate_homogeneous(p)) fail(Errc::NotHomogeneous, "relation is not homogeneous");

    RationalityCertificate cert;
    if (p.relation.is_zero()) {
        cert.verdict = Verdict::Toric;
        return cert;
    }

    if (auto ct = find_cross_term(p.relation))
        return cross_term_route(p, p.relation, ct->first, ct->second, std::move(cert));

    if (quadratic_rank(p.relation) < 2) {
        cert.verdict = Verdict::Inconclusive;
        cert.reason = "quadratic rank < 2";
        return cert;
    }

    // No cross terms, so the quadratic part is diagonal with at least two
    // squares. Prefer a pair of equal multidegree (stronger verdict).
    std::vector<int> diag;
    for (int k = 0; k < p.nvars(); ++k) {
        Exponents e(p.nvars(), 0);
        e[k] = 2;
        if (p.relation.coeff(e) != 0) diag.push_back(k);
    }
    int vi = diag[0], vj = diag[1];
    for (size_t a = 0; a < diag.size() && !(p.variables[vi].degree == p.variables[vj].degree); ++a)
        for (size_t b = a + 1; b < diag.size(); ++b)
            if (p.variables[diag[a]].degree == p.variables[diag[b]].degree) {
                vi = diag[a];
                vj = diag[b];
                break;
            }

    Exponents ei(p.nvars(), 0), ej(p.nvars(), 0);
    ei[vi] = 2;
    ej[vj] = 2;
    Rat c1 = p.relation.coeff(ei), c2 = p.relation.coeff(ej);
    cert.scaling = {c1, c2};
    auto s = rat_sqrt(-c2 / c1);
    cert.requires_sqrt = !s.has_value();

    if (p.variables[vi].degree == p.variables[vj].degree) {
        // Shear x_i := x_i + t x_j; the cross coefficient of the image is
        // 2 c1 t, nonzero for any t != 0, and the exact-sqrt choice also
        // cancels the x_j^2 term.
        Rat t = s ? *s : Rat(1);
        Polynomial shear =
            Polynomial::variable(p.nvars(), vi) + t * Polynomial::variable(p.nvars(), vj);
        Polynomial sheared = substitute(p.relation, vi, shear);
        cert.substitutions.push_back({vi, shear});
        int i = std::min(vi, vj), j = std::max(vi, vj);
        return cross_term_route(p, sheared, i, j, std::move(cert));
    }

    // Unequal degrees with 2 deg x_i = 2 deg x_j: the difference is 2-torsion.
    GradedElement tau = ge_sub(p.group, p.variables[vi].degree, p.variables[vj].degree);
    if (ge_is_zero(tau) || ge_order(p.group, tau) != 2)
        fail(Errc::NotTwoTorsion, "degree difference of the diagonal pair is not 2-torsion");
    cert.verdict = Verdict::DoubleCoverThenRational;
    cert.torsion_class = tau;
    auto regraded = std::make_shared<GradedPresentation>(regrade_double_cover(p, tau));
    auto cover = std::make_shared<RationalityCertificate>(rationality_certificate(*regraded));
    cert.regraded = regraded;
    cert.cover = cover;
    return cert;
}

GradedPresentation regrade_double_cover(const GradedPresentation& p, const GradedElement& tau) {
    if (ge_is_zero(tau) || !ge_is_zero(ge_scale(p.group, 2, tau)))
        fail(Errc::NotTwoTorsion, "tau must be nonzero with 2 tau = 0");

    // G = Z^{f+t} / <m_k e_{f+k}>; adding the relation tau gives G/<tau>.
    const int f = p.group.free_rank;
    const int t = static_cast<int>(p.group.torsion.size());
    IntMatrix rel(f + t, t + 1);
    for (int k = 0; k < t; ++k) rel.at(f + k, k) = p.group.torsion[k];
    for (int r = 0; r < f; ++r) rel.at(r, t) = tau.free[r];
    for (int k = 0; k < t; ++k) rel.at(f + k, t) = tau.residues[k];

    SmithDecomposition snf = smith_normal_form(rel);
    int rk = 0;
    for (const Int& e : snf.elementary_divisors)
        if (e != 0) ++rk;

    GradedPresentation out;
    out.group.free_rank = f + t - rk;
    for (int k = 0; k < rk; ++k)
        if (snf.elementary_divisors[k] >= 2) out.group.torsion.push_back(snf.elementary_divisors[k]);

    auto reduce = [&](const GradedElement& d) {
        IntVec lift(f + t);
        for (int r = 0; r < f; ++r) lift[r] = d.free[r];
        for (int k = 0; k < t; ++k) lift[f + k] = d.residues[k];
        IntVec y = snf.u.apply(lift);
        IntVec free(y.begin() + rk, y.end());
        IntVec residues;
        for (int k = 0; k < rk; ++k)
            if (snf.elementary_divisors[k] >= 2) residues.push_back(y[k]);
        return ge_make(out.group, std::move(free), std::move(residues));
    };
    for (const GradedVariable& v : p.variables) out.variables.push_back({v.name, reduce(v.degree)});
    out.relation = p.relation;
    if (!validate_homogeneous(out))
        fail(Errc::NotHomogeneous, "relation lost homogeneity under regrading");
    return out;
}

GradedPresentation section7_presentation(int d) {
    if (d < 1) fail(Errc::InvalidArgument, "d must be >= 1");
    GradedPresentation p;
    p.group = GradedGroup{3, {Int(2)}};
    // Bidegrees of the base P1 x P1, the relative degree of x2, and the Z/2
    // weight separating the anti-invariant coordinates y1, z1, x1.
    auto deg = [&](long a, long b, long c, long r) {
        return ge_make(p.group, IntVec{Int(a), Int(b), Int(c)}, IntVec{Int(r)});
    };
    p.variables = {
        {"y0", deg(1, 0, 0, 0)}, {"y1", deg(1, 0, 0, 1)}, {"z0", deg(0, 1, 0, 0)},
        {"z1", deg(0, 1, 0, 1)}, {"x0", deg(0, 0, 1, 0)}, {"x1", deg(0, 0, 1, 1)},
        {"x2", deg(-d, -d, 1, 0)},
    };
    const int n = 7;
    auto mono = [&](int y0, int y1, int z0, int z1, int x0, int x1, int x2, long coeff) {
        return Polynomial::monomial(n, Exponents{y0, y1, z0, z1, x0, x1, x2}, Rat(coeff));
    };
    // Representative of the general invariant member: q = (y0 z0)^{2d}
    // + (y1 z1)^{2d} + (y0 y1 z0 z1)^d, products of y_i^2, z_i^2, y_i z_i.
    Polynomial q = mono(2 * d, 0, 2 * d, 0, 0, 0, 0, 1) + mono(0, 2 * d, 0, 2 * d, 0, 0, 0, 1) +
                   mono(d, d, d, d, 0, 0, 0, 1);
    Polynomial x2sq = mono(0, 0, 0, 0, 0, 0, 2, 1);
    p.relation = mono(0, 0, 0, 0, 2, 0, 0, 1) - mono(0, 0, 0, 0, 0, 2, 0, 1) - q * x2sq;
    return p;
}

Section7Report section7_report(int d) {
    Section7Report rep;
    rep.d = d;
    rep.presentation = section7_presentation(d);

    // Associated pair: dim 3, rho 3, five coefficient-1 boundary components
    // (the x2 = 0 section and the four boundary divisors pulled back from the
    // quotient surface, pairing into two classes).
    AbstractPairData pair = make_pair(
        3, 3,
        {
            {{Rat(1), Rat(0), Rat(0)}, Rat(1), "Gy"},
            {{Rat(1), Rat(0), Rat(0)}, Rat(1), "Gy'"},
            {{Rat(0), Rat(1), Rat(0)}, Rat(1), "Gz"},
            {{Rat(0), Rat(1), Rat(0)}, Rat(1), "Gz'"},
            {{Rat(0), Rat(0), Rat(1)}, Rat(1), "E2"},
        });
    rep.gamma = absolute_complexity(pair);

    // Discriminant curve: smooth of bidegree (2d, 2d) on P1 x P1, genus by
    // adjunction (a-1)(b-1).
    rep.genus = Int(2 * d - 1) * Int(2 * d - 1);
    rep.martens_bound = 2 * d;
    rep.gate_passes = 2 * d > 6;
    rep.certificate = rationality_certificate(rep.presentation);
    return rep;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Toric: return "Toric";
        case Verdict::Rational: return "Rational";
        case Verdict::DoubleCoverThenRational: return "DoubleCoverThenRational";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string certificate_report(const GradedPresentation& p, const RationalityCertificate& cert) {
    std::vector<std::string> names;
    for (const GradedVariable& v : p.variables) names.push_back(v.name);
    std::ostringstream os;
    os << "verdict = " << verdict_name(cert.verdict) << "\n";
    if (!cert.reason.empty()) os << "reason = " << cert.reason << "\n";
    if (cert.scaling)
        os << "scaling = " << to_string(cert.scaling->first) << ", "
           << to_string(cert.scaling->second) << "\n"
           << "requires_sqrt = " << (cert.requires_sqrt ? "true" : "false") << "\n";
    if (cert.cross_pair)
        os << "cross_pair = " << names[cert.cross_pair->first] << ", "
           << names[cert.cross_pair->second] << "\n";
    for (size_t s = 0; s < cert.substitutions.size(); ++s)
        os << "substitution." << s << " = " << names[cert.substitutions[s].var] << " := "
           << poly_to_string(cert.substitutions[s].replacement, names) << "\n";
    if (cert.normal_form) os << "normal_form = " << poly_to_string(*cert.normal_form, names) << "\n";
    if (cert.mu) {
        os << "mu = " << to_string(cert.mu->mu) << "\n";
        Polynomial nu = Polynomial::monomial(p.nvars(), cert.mu->nu, 1);
        os << "nu = " << poly_to_string(nu, names) << "\n";
        if (cert.mu_primitivity_checked)
            os << "mu_primitive_in_M = " << (cert.mu_primitive_in_m ? "true" : "false") << "\n";
    }
    if (cert.torsion_class) os << "torsion_class = " << ge_to_string(*cert.torsion_class) << "\n";
    if (cert.cover && cert.regraded) {
        os << "cover:\n";
        std::istringstream sub(certificate_report(*cert.regraded, *cert.cover));
        std::string line;
        while (std::getline(sub, line)) os << "  " << line << "\n";
    }
    return os.str();
}

}  // namespace torica
