#include "torica/cones.hpp"

#include <algorithm>

#include "torica/errors.hpp"
#include "torica/int_matrix.hpp"

namespace torica::cones {

namespace {

struct Ray {
    IntVec v;
    std::vector<char> tight;  // tight[s]: <ineq_s, v> == 0, for processed inequalities
};

std::vector<char> tight_set(const IntVec& v, const std::vector<IntVec>& ineqs, size_t upto) {
    std::vector<char> t(upto);
    for (size_t s = 0; s < upto; ++s) t[s] = (dot(ineqs[s], v) == 0);
    return t;
}

// Combinatorial adjacency test of the double description method: p and n are
// adjacent iff no third ray is tight on every inequality where both are tight.
bool adjacent(const Ray& p, const Ray& n, const std::vector<Ray>& all) {
    for (const Ray& r : all) {
        if (&r == &p || &r == &n) continue;
        bool covers = true;
        for (size_t s = 0; s < p.tight.size(); ++s)
            if (p.tight[s] && n.tight[s] && !r.tight[s]) {
                covers = false;
                break;
            }
        if (covers) return false;
    }
    return true;
}

}  // namespace

Generators solve_inequalities(const std::vector<IntVec>& ineqs, int dim) {
    std::vector<IntVec> lineality;
    lineality.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        IntVec e(dim, Int(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Ray> rays;

    for (size_t t = 0; t < ineqs.size(); ++t) {
        const IntVec& a = ineqs[t];
        if (static_cast<int>(a.size()) != dim)
            fail(Errc::InvalidArgument, "inequality dimension mismatch");

        if (is_zero(a)) {
            for (Ray& r : rays) r.tight.push_back(1);
            continue;
        }

        int cut = -1;
        for (size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                cut = static_cast<int>(i);
                break;
            }

        if (cut >= 0) {
            // The hyperplane slices the lineality space: one basis vector
            // becomes a ray, the rest are projected into the hyperplane.
            IntVec l0 = lineality[cut];
            if (dot(a, l0) < 0) l0 = vec_neg(l0);
            Int val0 = dot(a, l0);
            std::vector<IntVec> new_lin;
            for (size_t i = 0; i < lineality.size(); ++i) {
                if (static_cast<int>(i) == cut) continue;
                new_lin.push_back(primitive(vec_comb(val0, lineality[i], -dot(a, lineality[i]), l0)));
            }
            lineality = std::move(new_lin);
            for (Ray& r : rays) {
                r.v = primitive(vec_comb(val0, r.v, -dot(a, r.v), l0));
                r.tight = tight_set(r.v, ineqs, t + 1);
            }
            rays.push_back({l0, tight_set(l0, ineqs, t + 1)});
            continue;
        }

        std::vector<Ray*> pos, neg;
        for (Ray& r : rays) {
            Int s = dot(a, r.v);
            if (s > 0)
                pos.push_back(&r);
            else if (s < 0)
                neg.push_back(&r);
        }
        if (neg.empty()) {
            for (Ray& r : rays) r.tight.push_back(dot(a, r.v) == 0);
            continue;
        }

        std::vector<Ray> next;
        for (Ray& r : rays) {
            if (dot(a, r.v) >= 0) {
                Ray keep = r;
                keep.tight.push_back(dot(a, keep.v) == 0);
                next.push_back(std::move(keep));
            }
        }
        for (Ray* p : pos)
            for (Ray* n : neg) {
                if (!adjacent(*p, *n, rays)) continue;
                IntVec w = primitive(vec_comb(dot(a, p->v), n->v, -dot(a, n->v), p->v));
                if (is_zero(w)) continue;
                bool dup = false;
                for (const Ray& r : next)
                    if (r.v == w) {
                        dup = true;
                        break;
                    }
                if (!dup) next.push_back({w, tight_set(w, ineqs, t + 1)});
            }
        rays = std::move(next);
    }

    Generators out;
    out.lineality = std::move(lineality);
    for (Ray& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

bool contains(const Generators& dual, const IntVec& x) {
    for (const IntVec& l : dual.lineality)
        if (dot(l, x) != 0) return false;
    for (const IntVec& r : dual.rays)
        if (dot(r, x) < 0) return false;
    return true;
}

bool is_pointed(const Generators& dual, int dim) {
    // C pointed <=> its dual spans the whole space.
    std::vector<IntVec> all = dual.lineality;
    all.insert(all.end(), dual.rays.begin(), dual.rays.end());
    if (all.empty()) return dim == 0;
    return rank(IntMatrix::from_rows(all)) == dim;
}

std::vector<IntVec> extreme_rays(std::vector<IntVec> gens, int dim) {
    std::vector<IntVec> clean;
    for (IntVec& g : gens) {
        IntVec p = primitive(std::move(g));
        if (is_zero(p)) continue;
        if (std::find(clean.begin(), clean.end(), p) == clean.end()) clean.push_back(std::move(p));
    }
    std::vector<IntVec> result;
    for (size_t i = 0; i < clean.size(); ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < clean.size(); ++j)
            if (j != i) others.push_back(clean[j]);
        if (!contains(dual_cone(others, dim), clean[i])) result.push_back(clean[i]);
    }
    return result;
}

}  // namespace torica::cones
