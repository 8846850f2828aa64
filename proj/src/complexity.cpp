#include "torica/complexity.hpp"

#include <algorithm>
#include <sstream>

#include "torica/errors.hpp"
#include "torica/int_matrix.hpp"

namespace torica {

AbstractPairData make_pair(int n, int group_rank, std::vector<PairComponent> components,
                           bool permissive) {
    if (n < 0 || group_rank < 0) fail(Errc::InvalidArgument, "negative dimension or rank");
    for (const PairComponent& p : components) {
        if (static_cast<int>(p.cls.size()) != group_rank)
            fail(Errc::InvalidArgument, "component class vector has wrong length");
        if (p.coeff <= 0)
            fail(Errc::CoefficientOutOfRange, "component coefficient must be positive");
        if (!permissive && p.coeff > 1)
            fail(Errc::CoefficientOutOfRange,
                 "component coefficient " + to_string(p.coeff) + " exceeds 1 (use permissive mode)");
    }
    return AbstractPairData{n, group_rank, std::move(components)};
}

namespace {

RatVec part_class(const AbstractPairData& pair, const std::vector<Int>& s) {
    RatVec cls(pair.group_rank, Rat(0));
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] == 0) continue;
        for (int k = 0; k < pair.group_rank; ++k) cls[k] += Rat(s[j]) * pair.components[j].cls[k];
    }
    return cls;
}

}  // namespace

ComplexityReport decomposition_complexity(const AbstractPairData& pair, const Decomposition& dec) {
    const size_t k = pair.components.size();
    RatVec used(k, Rat(0));
    std::vector<RatVec> classes;
    Rat d = 0;
    for (const DecompositionPart& part : dec.parts) {
        if (part.a < 0) fail(Errc::InvalidArgument, "decomposition coefficient a < 0");
        if (part.s.size() != k) fail(Errc::InvalidArgument, "multiplicity vector length mismatch");
        for (size_t j = 0; j < k; ++j) {
            if (part.s[j] < 0) fail(Errc::InvalidArgument, "negative multiplicity");
            used[j] += part.a * Rat(part.s[j]);
        }
        classes.push_back(part_class(pair, part.s));
        d += part.a;
    }
    for (size_t j = 0; j < k; ++j)
        if (used[j] > pair.components[j].coeff)
            fail(Errc::DecompositionExceedsBoundary,
                 "sum a_i S_i exceeds Delta at component " + pair.components[j].name);

    ComplexityReport rep;
    rep.n = pair.n;
    rep.r = rational_rank(classes);
    rep.d = d;
    rep.c = Rat(pair.n + rep.r) - d;
    rep.witness = dec;
    return rep;
}

namespace {

Decomposition partition_decomposition(const AbstractPairData& pair,
                                      const std::vector<int>& rgs, int blocks) {
    Decomposition dec;
    dec.parts.resize(blocks);
    for (DecompositionPart& p : dec.parts) p.s.assign(pair.components.size(), Int(0));
    std::vector<bool> seen(blocks, false);
    for (size_t j = 0; j < rgs.size(); ++j) {
        DecompositionPart& p = dec.parts[rgs[j]];
        p.s[j] = 1;
        p.names.push_back(pair.components[j].name);
        if (!seen[rgs[j]] || pair.components[j].coeff < p.a) p.a = pair.components[j].coeff;
        seen[rgs[j]] = true;
    }
    return dec;
}

}  // namespace

ComplexityReport min_complexity(const AbstractPairData& pair) {
    const int k = static_cast<int>(pair.components.size());
    if (k > 12) fail(Errc::TooManyComponents, "more than 12 components (exhaustive regime)");
    if (k == 0) {
        ComplexityReport rep;
        rep.n = pair.n;
        rep.r = 0;
        rep.d = 0;
        rep.c = pair.n;
        return rep;
    }

    // Set partitions in restricted-growth-string lexicographic order.
    std::vector<int> rgs(k, 0);
    std::optional<ComplexityReport> best;
    for (;;) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        ComplexityReport rep =
            decomposition_complexity(pair, partition_decomposition(pair, rgs, blocks));
        if (!best || rep.c < best->c ||
            (rep.c == best->c && rep.witness.parts.size() < best->witness.parts.size()))
            best = std::move(rep);

        // next restricted growth string
        int i = k - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return *best;
}

Rat absolute_complexity(const AbstractPairData& pair) {
    Rat d = 0;
    for (const PairComponent& p : pair.components) d += p.coeff;
    return Rat(pair.n + pair.group_rank) - d;
}

std::vector<int> boundary_bracket(const AbstractPairData& pair) {
    std::vector<int> idx;
    for (size_t j = 0; j < pair.components.size(); ++j)
        if (pair.components[j].coeff > Rat(1, 2)) idx.push_back(static_cast<int>(j));
    return idx;
}

Rat local_complexity(int n, const RatVec& coefficients) {
    Rat d = 0;
    for (const Rat& a : coefficients) {
        if (a < 0) fail(Errc::InvalidArgument, "local decomposition coefficients must be >= 0");
        d += a;
    }
    return Rat(n) - d;
}

AbstractPairData pair_from_fan(const Fan& f, const InvariantDivisor& delta, bool permissive) {
    ClassGroup cg = class_group(f);
    std::vector<PairComponent> comps;
    for (size_t i = 0; i < f.rays.size(); ++i) {
        if (delta.coeffs[i] == 0) continue;
        RatVec e(f.rays.size(), Rat(0));
        e[i] = 1;
        comps.push_back({cg.degree_free(e), delta.coeffs[i], "D" + std::to_string(i)});
    }
    return make_pair(f.dim, cg.free_rank, std::move(comps), permissive);
}

TheoremVerdict toric_theorem_check(const Fan& f, const InvariantDivisor& delta) {
    TheoremVerdict v;
    auto hypothesis_failed = [&](const std::string& which) {
        v.pass = false;
        v.failed_hypothesis = which;
        return v;
    };

    bool complete;
    try {
        complete = is_complete(f);
    } catch (const Error& e) {
        if (e.code() != Errc::NotPure) throw;
        complete = false;
    }
    if (!complete) return hypothesis_failed("fan not complete");
    if (!is_simplicial(f)) return hypothesis_failed("fan not simplicial");
    for (const Rat& a : delta.coeffs)
        if (a < 0) return hypothesis_failed("Delta not effective");
    if (!lc_check_invariant(f, delta)) return hypothesis_failed("(X,Delta) not log canonical");

    RatVec anti(f.rays.size());
    for (size_t i = 0; i < f.rays.size(); ++i) anti[i] = Rat(1) - delta.coeffs[i];
    if (!is_nef(f, InvariantDivisor{anti})) return hypothesis_failed("-(K+Delta) not nef");

    ComplexityReport rep = min_complexity(pair_from_fan(f, delta));
    v.c = rep.c;
    v.floor_2c = rat_floor(2 * rep.c);
    v.report = rep;
    if (!(rep.c < 1)) return hypothesis_failed("complexity >= 1");

    // D = sum of all invariant divisors dominates [[Delta]] automatically.
    v.bracket_dominated = true;
    v.missing = 0;
    for (const Rat& a : delta.coeffs)
        if (a == 0) ++v.missing;
    v.pass = Rat(v.missing) <= Rat(v.floor_2c);
    return v;
}

// ---------------------------------------------------------------------------
// Pair file format:
//   n: 2
//   rho: 1
//   components:
//   class = 1 ; coeff = 1 ; name = L1

AbstractPairData parse_pair_file(const std::string& text, bool permissive) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> n, rho;
    bool in_components = false;
    std::vector<PairComponent> comps;

    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (first == "n:") {
            int v;
            if (!(ls >> v)) fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": bad n");
            n = v;
            continue;
        }
        if (first == "rho:") {
            int v;
            if (!(ls >> v)) fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": bad rho");
            rho = v;
            continue;
        }
        if (first == "components:") {
            in_components = true;
            continue;
        }
        if (!in_components)
            fail(Errc::SyntaxError,
                 "line " + std::to_string(lineno) + ": expected 'n:', 'rho:' or 'components:'");

        // class = c1 ... c_rho ; coeff = p/q ; name = str
        std::vector<std::string> fields;
        {
            std::string field;
            std::istringstream fs(line);
            while (std::getline(fs, field, ';')) fields.push_back(field);
        }
        PairComponent comp;
        bool have_class = false, have_coeff = false;
        for (const std::string& field : fields) {
            std::istringstream f2(field);
            std::string key, eq;
            if (!(f2 >> key >> eq) || eq != "=")
                fail(Errc::SyntaxError,
                     "line " + std::to_string(lineno) + ": expected 'key = value' fields");
            if (key == "class") {
                std::string tok;
                while (f2 >> tok) {
                    auto q = parse_rational(tok);
                    if (!q)
                        fail(Errc::SyntaxError,
                             "line " + std::to_string(lineno) + ": bad rational '" + tok + "'");
                    comp.cls.push_back(*q);
                }
                have_class = true;
            } else if (key == "coeff") {
                std::string tok;
                if (!(f2 >> tok))
                    fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": missing coeff");
                auto q = parse_rational(tok);
                if (!q)
                    fail(Errc::SyntaxError,
                         "line " + std::to_string(lineno) + ": bad rational '" + tok + "'");
                comp.coeff = *q;
                have_coeff = true;
            } else if (key == "name") {
                f2 >> comp.name;
            } else {
                fail(Errc::SyntaxError,
                     "line " + std::to_string(lineno) + ": unknown field '" + key + "'");
            }
        }
        if (!have_class || !have_coeff)
            fail(Errc::SyntaxError,
                 "line " + std::to_string(lineno) + ": component needs class and coeff");
        if (comp.name.empty()) comp.name = "P" + std::to_string(comps.size());
        comps.push_back(std::move(comp));
    }
    if (!n) fail(Errc::SyntaxError, "missing 'n:' line");
    if (!rho) fail(Errc::SyntaxError, "missing 'rho:' line");
    return make_pair(*n, *rho, std::move(comps), permissive);
}

std::string serialize_pair(const AbstractPairData& pair) {
    std::ostringstream os;
    os << "n: " << pair.n << "\n";
    os << "rho: " << pair.group_rank << "\n";
    os << "components:\n";
    for (const PairComponent& p : pair.components) {
        os << "class = " << to_string(p.cls) << " ; coeff = " << to_string(p.coeff)
           << " ; name = " << p.name << "\n";
    }
    return os.str();
}

}  // namespace torica
