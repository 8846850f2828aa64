#include "torica/graded.hpp"

#include <algorithm>
#include <sstream>

#include "torica/errors.hpp"

namespace torica {

namespace {
Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}
}  // namespace

GradedElement ge_zero(const GradedGroup& g) {
    return GradedElement{IntVec(g.free_rank, Int(0)), IntVec(g.torsion.size(), Int(0))};
}

GradedElement ge_make(const GradedGroup& g, IntVec free, IntVec residues) {
    if (static_cast<int>(free.size()) != g.free_rank || residues.size() != g.torsion.size())
        fail(Errc::InvalidArgument, "graded element shape mismatch");
    for (size_t i = 0; i < residues.size(); ++i) residues[i] = mod_reduce(residues[i], g.torsion[i]);
    return GradedElement{std::move(free), std::move(residues)};
}

GradedElement ge_add(const GradedGroup& g, const GradedElement& a, const GradedElement& b) {
    GradedElement r = a;
    for (size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
    for (size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = mod_reduce(r.residues[i] + b.residues[i], g.torsion[i]);
    return r;
}

GradedElement ge_sub(const GradedGroup& g, const GradedElement& a, const GradedElement& b) {
    GradedElement r = a;
    for (size_t i = 0; i < r.free.size(); ++i) r.free[i] -= b.free[i];
    for (size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = mod_reduce(r.residues[i] - b.residues[i], g.torsion[i]);
    return r;
}

GradedElement ge_scale(const GradedGroup& g, const Int& k, const GradedElement& a) {
    GradedElement r = a;
    for (Int& x : r.free) x *= k;
    for (size_t i = 0; i < r.residues.size(); ++i)
        r.residues[i] = mod_reduce(r.residues[i] * k, g.torsion[i]);
    return r;
}

bool ge_is_zero(const GradedElement& a) { return is_zero(a.free) && is_zero(a.residues); }

Int ge_order(const GradedGroup& g, const GradedElement& a) {
    if (!is_zero(a.free)) return 0;
    Int ord = 1;
    for (size_t i = 0; i < a.residues.size(); ++i) {
        if (a.residues[i] == 0) continue;
        Int gcd;
        mpz_gcd(gcd.get_mpz_t(), a.residues[i].get_mpz_t(), g.torsion[i].get_mpz_t());
        Int o = g.torsion[i] / gcd;
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
    }
    return ord;
}

std::string ge_to_string(const GradedElement& a) {
    std::ostringstream os;
    os << "(" << to_string(a.free);
    if (!a.residues.empty()) os << " ; " << to_string(a.residues);
    os << ")";
    return os.str();
}

Polynomial Polynomial::variable(int nvars, int i, const Rat& coeff) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), coeff);
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const Rat& coeff) {
    Polynomial p{nvars, {}};
    if (coeff != 0) p.terms.emplace(std::move(e), coeff);
    return p;
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    return monomial(nvars, Exponents(nvars, 0), c);
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (int k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

Rat Polynomial::coeff(const Exponents& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [e, c] : b.terms) {
        Rat& slot = r.terms[e];
        slot += c;
        if (slot == 0) r.terms.erase(e);
    }
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (Rat(-1) * b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r{a.nvars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exponents e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Rat& slot = r.terms[e];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(e);
        }
    return r;
}

Polynomial operator*(const Rat& c, const Polynomial& a) {
    Polynomial r{a.nvars, {}};
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms) r.terms.emplace(e, c * k);
    return r;
}

Polynomial poly_pow(const Polynomial& a, int e) {
    Polynomial r = Polynomial::constant(a.nvars, 1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

Polynomial substitute(const Polynomial& q, int j, const Polynomial& h) {
    Polynomial r{q.nvars, {}};
    std::vector<Polynomial> hpow{Polynomial::constant(q.nvars, 1)};
    for (const auto& [e, c] : q.terms) {
        int k = e[j];
        while (static_cast<int>(hpow.size()) <= k) hpow.push_back(hpow.back() * h);
        Exponents rest = e;
        rest[j] = 0;
        r = r + c * (Polynomial::monomial(q.nvars, rest, 1) * hpow[k]);
    }
    return r;
}

Polynomial divide_out(const Polynomial& q, int i) {
    Polynomial r{q.nvars, {}};
    for (const auto& [e, c] : q.terms) {
        if (e[i] == 0) continue;
        Exponents d = e;
        --d[i];
        r.terms.emplace(std::move(d), c);
    }
    return r;
}

Polynomial free_of(const Polynomial& q, int i) {
    Polynomial r{q.nvars, {}};
    for (const auto& [e, c] : q.terms)
        if (e[i] == 0) r.terms.emplace(e, c);
    return r;
}

Polynomial degree_part(const Polynomial& q, int degree) {
    Polynomial r{q.nvars, {}};
    for (const auto& [e, c] : q.terms) {
        int t = 0;
        for (int k : e) t += k;
        if (t == degree) r.terms.emplace(e, c);
    }
    return r;
}

std::string poly_to_string(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest term first: reverse map order.
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        for (int k : e)
            if (k) any_var = true;
        if (a != 1 || !any_var) os << to_string(a);
        bool started = (a != 1 || !any_var);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Laurent Laurent::from_polynomial(const Polynomial& p) {
    Laurent l{p.nvars, {}};
    for (const auto& [e, c] : p.terms) {
        IntVec z(e.size());
        for (size_t i = 0; i < e.size(); ++i) z[i] = e[i];
        l.terms.emplace(std::move(z), c);
    }
    return l;
}

Laurent Laurent::monomial(int nvars, IntVec e, const Rat& coeff) {
    Laurent l{nvars, {}};
    if (coeff != 0) l.terms.emplace(std::move(e), coeff);
    return l;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms) {
        Rat& slot = r.terms[e];
        slot += c;
        if (slot == 0) r.terms.erase(e);
    }
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r{a.nvars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            IntVec e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Rat& slot = r.terms[e];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(e);
        }
    return r;
}

Laurent laurent_pow(const Laurent& a, int e) {
    Laurent r = Laurent::monomial(a.nvars, IntVec(a.nvars, Int(0)), 1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

Laurent evaluate_at(const Polynomial& p, const std::vector<Laurent>& tuple) {
    Laurent r{tuple.empty() ? p.nvars : tuple[0].nvars, {}};
    for (const auto& [e, c] : p.terms) {
        Laurent term = Laurent::monomial(r.nvars, IntVec(r.nvars, Int(0)), c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * laurent_pow(tuple[i], e[i]);
        r = r + term;
    }
    return r;
}

GradedElement multidegree(const GradedPresentation& p, const std::vector<Int>& exponents) {
    GradedElement d = ge_zero(p.group);
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0)
            d = ge_add(p.group, d, ge_scale(p.group, exponents[i], p.variables[i].degree));
    return d;
}

GradedElement multidegree(const GradedPresentation& p, const Exponents& exponents) {
    IntVec z(exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i) z[i] = exponents[i];
    return multidegree(p, z);
}

bool validate_homogeneous(const GradedPresentation& p) {
    if (p.relation.is_zero()) return true;
    return homogeneous_degree(p, p.relation).has_value();
}

std::optional<GradedElement> homogeneous_degree(const GradedPresentation& p, const Polynomial& q) {
    std::optional<GradedElement> deg;
    for (const auto& [e, c] : q.terms) {
        GradedElement d = multidegree(p, e);
        if (!deg)
            deg = d;
        else if (!(*deg == d))
            return std::nullopt;
    }
    return deg;
}

// ---------------------------------------------------------------------------
// Presentation file format:
//   group: free=f torsion=m1,m2,...
//   var NAME deg = v1 ... vf ; t1,...
//   relation: <polynomial, one line>
// '#' comments and blank lines ignored.

namespace {

IntVec parse_int_list(const std::string& s, int lineno) {
    IntVec out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        // trim
        size_t b = cur.find_first_not_of(" \t");
        size_t e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        cur = cur.substr(b, e - b + 1);
        try {
            out.emplace_back(cur);
        } catch (const std::invalid_argument&) {
            fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": bad integer '" + cur + "'");
        }
    }
    return out;
}

struct PolyParser {
    const std::string& src;
    const std::map<std::string, int>& var_index;
    int nvars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }

    bool parse_uint(Int& out) {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) return false;
        out = Int(src.substr(start, pos - start));
        return true;
    }

    bool parse_name(std::string& out) {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            if (pos == start && isdigit(static_cast<unsigned char>(src[pos]))) break;
            ++pos;
        }
        if (pos == start) return false;
        out = src.substr(start, pos - start);
        return true;
    }

    // term := [coef] [* ] factor (['*'] factor)*, factor := name ['^' uint]
    Polynomial parse_term() {
        Rat coef(1);
        Int num;
        bool have_coef = false;
        if (parse_uint(num)) {
            coef = Rat(num);
            have_coef = true;
            skip_ws();
            if (pos < src.size() && src[pos] == '/') {
                ++pos;
                Int den;
                if (!parse_uint(den) || den == 0) fail(Errc::SyntaxError, "bad rational coefficient");
                coef = Rat(num, den);
                coef.canonicalize();
            }
        }
        Exponents e(nvars, 0);
        bool have_var = false;
        for (;;) {
            skip_ws();
            if (pos < src.size() && src[pos] == '*') {
                ++pos;
                skip_ws();
            }
            std::string name;
            size_t save = pos;
            if (!parse_name(name)) {
                pos = save;
                break;
            }
            auto it = var_index.find(name);
            if (it == var_index.end()) fail(Errc::SyntaxError, "unknown variable '" + name + "'");
            int exp = 1;
            skip_ws();
            if (pos < src.size() && src[pos] == '^') {
                ++pos;
                Int x;
                if (!parse_uint(x)) fail(Errc::SyntaxError, "bad exponent");
                exp = static_cast<int>(x.get_si());
            }
            e[it->second] += exp;
            have_var = true;
        }
        if (!have_coef && !have_var) fail(Errc::SyntaxError, "empty term in relation");
        return Polynomial::monomial(nvars, std::move(e), coef);
    }

    Polynomial parse() {
        Polynomial p = Polynomial::zero(nvars);
        skip_ws();
        if (pos >= src.size()) return p;  // empty relation
        int sign = 1;
        if (src[pos] == '+' || src[pos] == '-') {
            sign = src[pos] == '-' ? -1 : 1;
            ++pos;
        }
        for (;;) {
            Polynomial t = parse_term();
            p = p + Rat(sign) * t;
            skip_ws();
            if (pos >= src.size()) break;
            if (src[pos] == '+')
                sign = 1;
            else if (src[pos] == '-')
                sign = -1;
            else
                fail(Errc::SyntaxError, std::string("unexpected character '") + src[pos] +
                                            "' in relation");
            ++pos;
        }
        return p;
    }
};

}  // namespace

GradedPresentation parse_presentation_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_group = false;
    GradedPresentation p;
    std::map<std::string, int> var_index;
    std::optional<std::string> relation_src;

    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (first == "group:") {
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("free=", 0) == 0) {
                    p.group.free_rank = std::stoi(tok.substr(5));
                    have_group = true;
                } else if (tok.rfind("torsion=", 0) == 0) {
                    p.group.torsion = parse_int_list(tok.substr(8), lineno);
                    for (const Int& m : p.group.torsion)
                        if (m < 2)
                            fail(Errc::SyntaxError,
                                 "line " + std::to_string(lineno) + ": torsion order must be >= 2");
                } else {
                    fail(Errc::SyntaxError,
                         "line " + std::to_string(lineno) + ": unexpected token '" + tok + "'");
                }
            }
            continue;
        }
        if (first == "var") {
            if (!have_group)
                fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": 'var' before 'group:'");
            std::string name, eq, deg;
            if (!(ls >> name >> deg >> eq) || deg != "deg" || eq != "=")
                fail(Errc::SyntaxError,
                     "line " + std::to_string(lineno) + ": expected 'var NAME deg = ...'");
            std::string rest;
            std::getline(ls, rest);
            size_t semi = rest.find(';');
            std::string free_part = semi == std::string::npos ? rest : rest.substr(0, semi);
            std::string tors_part = semi == std::string::npos ? "" : rest.substr(semi + 1);
            IntVec free;
            std::istringstream fs(free_part);
            std::string tok;
            while (fs >> tok) {
                try {
                    free.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    fail(Errc::SyntaxError,
                         "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
                }
            }
            IntVec residues = parse_int_list(tors_part, lineno);
            if (static_cast<int>(free.size()) != p.group.free_rank)
                fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": degree has " +
                                            std::to_string(free.size()) + " free coordinates, expected " +
                                            std::to_string(p.group.free_rank));
            residues.resize(p.group.torsion.size(), Int(0));
            if (var_index.count(name))
                fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": duplicate variable '" +
                                            name + "'");
            var_index[name] = static_cast<int>(p.variables.size());
            p.variables.push_back({name, ge_make(p.group, std::move(free), std::move(residues))});
            continue;
        }
        if (first == "relation:") {
            std::string rest;
            std::getline(ls, rest);
            relation_src = rest;
            continue;
        }
        fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": unexpected '" + first + "'");
    }
    if (!have_group) fail(Errc::SyntaxError, "missing 'group:' line");
    p.relation = Polynomial::zero(p.nvars());
    if (relation_src) {
        PolyParser pp{*relation_src, var_index, p.nvars()};
        p.relation = pp.parse();
    }
    return p;
}

std::string serialize_presentation(const GradedPresentation& p) {
    std::ostringstream os;
    os << "group: free=" << p.group.free_rank << " torsion=";
    for (size_t i = 0; i < p.group.torsion.size(); ++i) {
        if (i) os << ",";
        os << to_string(p.group.torsion[i]);
    }
    os << "\n";
    for (const GradedVariable& v : p.variables) {
        os << "var " << v.name << " deg = " << to_string(v.degree.free);
        if (!p.group.torsion.empty()) {
            os << " ; ";
            for (size_t i = 0; i < v.degree.residues.size(); ++i) {
                if (i) os << ",";
                os << to_string(v.degree.residues[i]);
            }
        }
        os << "\n";
    }
    std::vector<std::string> names;
    for (const GradedVariable& v : p.variables) names.push_back(v.name);
    os << "relation: " << (p.relation.is_zero() ? "" : poly_to_string(p.relation, names)) << "\n";
    return os.str();
}

}  // namespace torica
