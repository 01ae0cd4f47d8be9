#include "hilb2/grading.hpp"

#include <numeric>
#include <sstream>

namespace hilb2 {

namespace {

long long mod_reduce(long long value, long modulus) {
    long long r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

} // namespace

std::string DegreeValue::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < free.size(); ++i) {
        if (i) os << ",";
        os << free[i];
    }
    if (!torsion.empty()) {
        os << ";";
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (i) os << ",";
            os << torsion[i];
        }
    }
    os << ")";
    return os.str();
}

void Grading::validate() const {
    for (long m : torsion_moduli)
        if (m < 2) throw parse_error("torsion modulus must be >= 2");
    auto check = [&](const DegreeValue& d, const char* name) {
        if (d.free.size() != free_rank)
            throw parse_error(std::string(name) + ": free part has wrong length");
        if (d.torsion.size() != torsion_moduli.size())
            throw parse_error(std::string(name) + ": torsion part has wrong length");
        for (size_t j = 0; j < d.torsion.size(); ++j)
            if (d.torsion[j] < 0 || d.torsion[j] >= torsion_moduli[j])
                throw parse_error(std::string(name) + ": torsion residue out of range");
    };
    check(deg_x, "deg_x");
    check(deg_y, "deg_y");
}

DegreeValue degree_of(unsigned long u, unsigned long v, const Grading& g) {
    DegreeValue d = g.zero();
    for (unsigned i = 0; i < g.free_rank; ++i)
        d.free[i] = (long long)u * g.deg_x.free[i] + (long long)v * g.deg_y.free[i];
    for (size_t j = 0; j < g.torsion_moduli.size(); ++j)
        d.torsion[j] = (long)mod_reduce((long long)u * g.deg_x.torsion[j] +
                                        (long long)v * g.deg_y.torsion[j],
                                        g.torsion_moduli[j]);
    return d;
}

namespace {

// Rank of the r x 2 integer matrix whose columns are the free parts of
// deg(x) and deg(y).
int free_rank_of_map(const Grading& g, size_t* pivot_row, size_t* second_row) {
    size_t r = g.free_rank;
    size_t first = r;
    for (size_t i = 0; i < r; ++i) {
        if (g.deg_x.free[i] != 0 || g.deg_y.free[i] != 0) { first = i; break; }
    }
    if (first == r) return 0;
    if (pivot_row) *pivot_row = first;
    for (size_t i = first + 1; i < r; ++i) {
        long long det = g.deg_x.free[first] * g.deg_y.free[i] -
                        g.deg_x.free[i] * g.deg_y.free[first];
        if (det != 0) {
            if (second_row) *second_row = i;
            return 2;
        }
    }
    return 1;
}

// Smallest k >= 1 such that k * (u,v) has zero torsion degree.
long long torsion_period(long long u, long long v, const Grading& g) {
    long long e = 1;
    for (size_t j = 0; j < g.torsion_moduli.size(); ++j) {
        long m = g.torsion_moduli[j];
        long long c = mod_reduce(u * g.deg_x.torsion[j] + v * g.deg_y.torsion[j], m);
        long long need = m / gcd_ll(m, c == 0 ? m : c);
        e = e / gcd_ll(e, need) * need;
    }
    return e;
}

} // namespace

DegreeZeroClass degree_zero_generator(const Grading& g) {
    size_t pivot = 0;
    int rank = free_rank_of_map(g, &pivot, nullptr);

    if (rank == 2) return {DegreeZeroClass::Trivial};

    if (rank == 0) {
        // The free part vanishes, so the degree-zero exponents form a
        // finite-index sublattice of Z^2 intersected with N^2; it always
        // needs two generators, e.g. (e1,0) and (0,e2).
        return {DegreeZeroClass::NotMonogenic};
    }

    // rank 1: the free kernel is spanned by one primitive vector.
    long long a = g.deg_x.free[pivot];
    long long b = g.deg_y.free[pivot];
    long long d = gcd_ll(a, b);
    long long w1 = b / d, w2 = -a / d;
    if (w1 < 0 || (w1 == 0 && w2 < 0)) { w1 = -w1; w2 = -w2; }
    if (w2 < 0) {
        // Mixed-sign kernel direction: no nonzero point of N^2 has
        // vanishing free degree.
        return {DegreeZeroClass::Trivial};
    }
    // The search for the minimal degree-zero monomial is bounded by the
    // lcm of the torsion moduli scaled onto the primitive kernel vector:
    // congruences force the exponent to be a multiple of e*(w1,w2).
    long long e = torsion_period(w1, w2, g);
    return {DegreeZeroClass::Monogenic,
            {(unsigned long)(e * w1), (unsigned long)(e * w2)}};
}

std::vector<std::pair<unsigned long, unsigned long>>
monomials_of_degree(const DegreeValue& d, const Grading& g) {
    if (degree_zero_generator(g).kind != DegreeZeroClass::Trivial)
        throw unsupported_grading("monomials_of_degree requires a positive grading");

    auto matches = [&](long long u, long long v) {
        if (u < 0 || v < 0) return false;
        for (unsigned i = 0; i < g.free_rank; ++i)
            if (u * g.deg_x.free[i] + v * g.deg_y.free[i] != d.free[i]) return false;
        for (size_t j = 0; j < g.torsion_moduli.size(); ++j)
            if (mod_reduce(u * g.deg_x.torsion[j] + v * g.deg_y.torsion[j],
                           g.torsion_moduli[j]) != (long long)d.torsion[j])
                return false;
        return true;
    };

    std::vector<std::pair<unsigned long, unsigned long>> out;
    size_t i1 = 0, i2 = 0;
    int rank = free_rank_of_map(g, &i1, &i2);

    if (rank == 2) {
        long long det = g.deg_x.free[i1] * g.deg_y.free[i2] -
                        g.deg_x.free[i2] * g.deg_y.free[i1];
        long long nu = d.free[i1] * g.deg_y.free[i2] - d.free[i2] * g.deg_y.free[i1];
        long long nv = g.deg_x.free[i1] * d.free[i2] - g.deg_x.free[i2] * d.free[i1];
        if (nu % det == 0 && nv % det == 0 && matches(nu / det, nv / det))
            out.emplace_back((unsigned long)(nu / det), (unsigned long)(nv / det));
        return out;
    }

    // rank 1 with a Trivial degree-zero submonoid: the pivot row has both
    // entries nonzero with the same sign, so solutions live in a finite box.
    long long a = g.deg_x.free[i1], b = g.deg_y.free[i1], c = d.free[i1];
    if (a < 0) { a = -a; b = -b; c = -c; }
    if (c < 0) return out;
    for (long long u = 0; a * u <= c; ++u) {
        long long rem = c - a * u;
        if (rem % b == 0 && matches(u, rem / b))
            out.emplace_back((unsigned long)u, (unsigned long)(rem / b));
    }
    return out;
}

} // namespace hilb2
