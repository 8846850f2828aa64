#include "torica/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "torica/errors.hpp"

namespace torica {

std::vector<IntVec> Fan::cone_rays(const Cone& c) const {
    std::vector<IntVec> out;
    out.reserve(c.ray_indices.size());
    for (int i : c.ray_indices) out.push_back(rays[i]);
    return out;
}

int Fan::cone_dim(const Cone& c) const {
    if (c.ray_indices.empty()) return 0;
    return rank(IntMatrix::from_rows(cone_rays(c)));
}

bool Fan::cone_contains(int k, const IntVec& x) const { return cones::contains(duals[k], x); }

int Fan::find_containing_cone(const IntVec& x) const {
    for (size_t k = 0; k < max_cones.size(); ++k)
        if (cone_contains(static_cast<int>(k), x)) return static_cast<int>(k);
    return -1;
}

bool Fan::is_face_of(const Cone& face, int k) const {
    const Cone& big = max_cones[k];
    if (!std::includes(big.ray_indices.begin(), big.ray_indices.end(), face.ray_indices.begin(),
                       face.ray_indices.end()))
        return false;
    // Smallest face of cone k containing `face`: cut by the sum of dual rays
    // vanishing on all of `face`; compare its ray set with `face`.
    IntVec m(dim, Int(0));
    for (const IntVec& w : duals[k].rays) {
        bool vanishes = true;
        for (int i : face.ray_indices)
            if (dot(w, rays[i]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) m = vec_comb(Int(1), m, Int(1), w);
    }
    std::vector<int> smallest;
    for (int i : big.ray_indices)
        if (dot(m, rays[i]) == 0) smallest.push_back(i);
    return smallest == face.ray_indices;
}

bool Fan::has_cone(const Cone& c) const {
    for (size_t k = 0; k < max_cones.size(); ++k)
        if (is_face_of(c, static_cast<int>(k))) return true;
    return false;
}

namespace {

// sigma cap tau must be a common face. With the dual of each cone in hand:
// compute generators of the intersection, then check that the smallest face
// of sigma containing it lies inside tau (and symmetrically).
bool pair_intersects_in_common_face(const Fan& f, int a, int b) {
    std::vector<IntVec> ineqs;
    for (int k : {a, b}) {
        for (const IntVec& r : f.duals[k].rays) ineqs.push_back(r);
        for (const IntVec& l : f.duals[k].lineality) {
            ineqs.push_back(l);
            ineqs.push_back(vec_neg(l));
        }
    }
    cones::Generators inter = cones::solve_inequalities(ineqs, f.dim);
    // Strongly convex cones intersect in a strongly convex cone.
    if (!inter.lineality.empty()) return false;

    for (int k : {a, b}) {
        int other = (k == a) ? b : a;
        IntVec m(f.dim, Int(0));
        for (const IntVec& w : f.duals[k].rays) {
            bool vanishes = true;
            for (const IntVec& g : inter.rays)
                if (dot(w, g) != 0) {
                    vanishes = false;
                    break;
                }
            if (vanishes) m = vec_comb(Int(1), m, Int(1), w);
        }
        for (int i : f.max_cones[k].ray_indices) {
            if (dot(m, f.rays[i]) != 0) continue;
            // Ray of the smallest face around the intersection: it must lie
            // in the other cone, else the cones overlap beyond a face.
            if (!f.cone_contains(other, f.rays[i])) return false;
        }
    }
    return true;
}

}  // namespace

Fan make_fan(int dim, std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones) {
    if (dim < 0) fail(Errc::InvalidArgument, "negative dimension");
    Fan f;
    f.dim = dim;

    for (IntVec& r : rays) {
        if (static_cast<int>(r.size()) != dim) fail(Errc::InvalidFan, "ray length != dim");
        r = primitive(std::move(r));
        if (is_zero(r) && dim > 0) fail(Errc::InvalidFan, "zero ray");
    }
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j]) fail(Errc::InvalidFan, "duplicate ray after normalization");
    f.rays = std::move(rays);

    if (max_cones.empty()) fail(Errc::EmptyFan, "fan has no cones");
    std::vector<char> used(f.rays.size(), 0);
    for (std::vector<int>& c : max_cones) {
        std::sort(c.begin(), c.end());
        for (size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] == c[i + 1]) fail(Errc::InvalidFan, "repeated ray index in cone");
        for (int i : c) {
            if (i < 0 || i >= static_cast<int>(f.rays.size()))
                fail(Errc::InvalidFan, "ray index out of range");
            used[i] = 1;
        }
        f.max_cones.push_back(Cone{std::move(c)});
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i]) fail(Errc::InvalidFan, "ray " + std::to_string(i) + " not used by any cone");

    for (const Cone& c : f.max_cones) {
        auto gens = f.cone_rays(c);
        cones::Generators dual = cones::dual_cone(gens, dim);
        if (!cones::is_pointed(dual, dim)) fail(Errc::InvalidFan, "cone is not strongly convex");
        // Listed generators must be the extreme rays -- the toric layer
        // identifies them with invariant prime divisors.
        for (size_t i = 0; i < gens.size() && gens.size() > 1; ++i) {
            std::vector<IntVec> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (cones::contains(cones::dual_cone(others, dim), gens[i]))
                fail(Errc::InvalidFan, "listed ray is not an extreme ray of its cone");
        }
        f.duals.push_back(std::move(dual));
    }

    for (size_t a = 0; a < f.max_cones.size(); ++a)
        for (size_t b = a + 1; b < f.max_cones.size(); ++b)
            if (!pair_intersects_in_common_face(f, static_cast<int>(a), static_cast<int>(b)))
                fail(Errc::OverlappingCones, "cones " + std::to_string(a) + " and " +
                                                 std::to_string(b) +
                                                 " do not intersect in a common face");
    return f;
}

bool is_complete(const Fan& f) {
    if (f.dim == 0) return true;  // the point, covered by the zero cone
    for (const Cone& c : f.max_cones)
        if (f.cone_dim(c) != f.dim) fail(Errc::NotPure, "maximal cone of dimension < dim");

    // Every facet of every maximal cone must be shared by exactly two of
    // them. Facets are read off the dual rays (facet normals); a facet is
    // identified by the set of fan rays lying on it.
    std::map<std::vector<int>, int> counts;
    for (size_t k = 0; k < f.max_cones.size(); ++k) {
        for (const IntVec& w : f.duals[k].rays) {
            std::vector<int> facet;
            for (int i : f.max_cones[k].ray_indices)
                if (dot(w, f.rays[i]) == 0) facet.push_back(i);
            ++counts[facet];
        }
    }
    for (const auto& [facet, n] : counts)
        if (n != 2) return false;
    return true;
}

bool is_simplicial(const Fan& f) {
    for (const Cone& c : f.max_cones)
        if (f.cone_dim(c) != static_cast<int>(c.ray_indices.size())) return false;
    return true;
}

bool is_smooth(const Fan& f) {
    for (const Cone& c : f.max_cones) {
        if (c.ray_indices.empty()) continue;
        if (f.cone_dim(c) != static_cast<int>(c.ray_indices.size())) return false;
        SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows(f.cone_rays(c)));
        for (const Int& e : snf.elementary_divisors)
            if (e != 1) return false;  // rays extend to a lattice basis iff all divisors are 1
    }
    return true;
}

StarQuotient star_quotient_full(const Fan& f, const Cone& sigma) {
    Cone s = sigma;
    std::sort(s.ray_indices.begin(), s.ray_indices.end());

    StarQuotient out;
    if (s.ray_indices.empty()) {
        out.fan = f;
        out.projection = IntMatrix::identity(f.dim);
        for (size_t k = 0; k < f.max_cones.size(); ++k) out.containing_cones.push_back(static_cast<int>(k));
        return out;
    }

    bool found = false;
    for (size_t k = 0; k < f.max_cones.size(); ++k) {
        if (f.is_face_of(s, static_cast<int>(k))) {
            found = true;
            out.containing_cones.push_back(static_cast<int>(k));
        }
    }
    if (!found) fail(Errc::ConeNotInFan, "sigma is not a face of any cone of the fan");

    // Projection N -> N/(span(sigma) cap N): Smith form of the matrix whose
    // columns are sigma's rays; the last (dim - rank) rows of U give a
    // surjection with kernel exactly the saturated span.
    IntMatrix c = IntMatrix::from_columns(f.cone_rays(s));
    SmithDecomposition snf = smith_normal_form(c);
    int rk = 0;
    for (const Int& e : snf.elementary_divisors)
        if (e != 0) ++rk;
    int qdim = f.dim - rk;
    IntMatrix proj(qdim, f.dim);
    for (int i = 0; i < qdim; ++i)
        for (int j = 0; j < f.dim; ++j) proj.at(i, j) = snf.u.at(rk + i, j);
    out.projection = proj;

    std::vector<IntVec> new_rays;
    std::vector<std::vector<int>> new_cones;
    for (int k : out.containing_cones) {
        std::vector<IntVec> images;
        for (int i : f.max_cones[k].ray_indices) {
            IntVec img = primitive(proj.apply(f.rays[i]));
            if (!is_zero(img)) images.push_back(std::move(img));
        }
        std::vector<int> idxs;
        for (const IntVec& r : cones::extreme_rays(images, qdim)) {
            auto it = std::find(new_rays.begin(), new_rays.end(), r);
            int idx;
            if (it == new_rays.end()) {
                idx = static_cast<int>(new_rays.size());
                new_rays.push_back(r);
            } else {
                idx = static_cast<int>(it - new_rays.begin());
            }
            idxs.push_back(idx);
        }
        new_cones.push_back(std::move(idxs));
    }
    out.fan = make_fan(qdim, std::move(new_rays), std::move(new_cones));
    return out;
}

Fan star_quotient(const Fan& f, const Cone& sigma) { return star_quotient_full(f, sigma).fan; }

Fan parse_fan_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int dim = -1;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> cones_raw;
    enum { Preamble, Rays, Cones } section = Preamble;

    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank

        if (first == "dim:") {
            if (!(ls >> dim) || dim < 0)
                fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": expected 'dim: n'");
            continue;
        }
        if (first == "rays:") {
            if (dim < 0)
                fail(Errc::SyntaxError, "line " + std::to_string(lineno) + ": 'rays:' before 'dim:'");
            section = Rays;
            continue;
        }
        if (first == "cones:") {
            if (section != Rays)
                fail(Errc::SyntaxError,
                     "line " + std::to_string(lineno) + ": 'cones:' without a preceding 'rays:' section");
            section = Cones;
            continue;
        }
        if (section == Preamble)
            fail(Errc::SyntaxError,
                 "line " + std::to_string(lineno) + ": expected 'dim:', 'rays:' or 'cones:'");

        std::istringstream vals(line);
        if (section == Rays) {
            IntVec ray;
            std::string tok;
            while (vals >> tok) {
                try {
                    ray.emplace_back(tok);
                } catch (const std::invalid_argument&) {
                    fail(Errc::SyntaxError,
                         "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
                }
            }
            if (static_cast<int>(ray.size()) != dim)
                fail(Errc::SyntaxError,
                     "line " + std::to_string(lineno) + ": ray has " + std::to_string(ray.size()) +
                         " coordinates, expected " + std::to_string(dim));
            rays.push_back(std::move(ray));
        } else {
            std::vector<int> cone;
            std::string tok;
            while (vals >> tok) {
                try {
                    size_t pos = 0;
                    int idx = std::stoi(tok, &pos);
                    if (pos != tok.size() || idx < 0) throw std::invalid_argument(tok);
                    cone.push_back(idx);
                } catch (const std::exception&) {
                    fail(Errc::SyntaxError,
                         "line " + std::to_string(lineno) + ": bad ray index '" + tok + "'");
                }
            }
            cones_raw.push_back(std::move(cone));
        }
    }
    if (dim < 0) fail(Errc::SyntaxError, "missing 'dim:' line");
    if (section != Cones) fail(Errc::SyntaxError, "missing 'cones:' section");
    return make_fan(dim, std::move(rays), std::move(cones_raw));
}

std::string serialize_fan(const Fan& f) {
    std::ostringstream os;
    os << "dim: " << f.dim << "\n";
    os << "rays:\n";
    for (const IntVec& r : f.rays) os << to_string(r) << "\n";
    os << "cones:\n";
    for (const Cone& c : f.max_cones) {
        for (size_t i = 0; i < c.ray_indices.size(); ++i) {
            if (i) os << ' ';
            os << c.ray_indices[i];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace torica
