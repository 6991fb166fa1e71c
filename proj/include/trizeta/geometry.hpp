#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trizeta/matrix.hpp"
#include "trizeta/rational.hpp"
#include "trizeta/report.hpp"

namespace trizeta {
namespace geom {

// ---------------------------------------------------------------------------
// Basis bookkeeping for wedge^3 Q^6: the twenty 3-subsets of {1..6} in
// lexicographic order.

inline const std::array<std::array<int, 3>, 20>& three_subsets() {
    static const std::array<std::array<int, 3>, 20> subsets = [] {
        std::array<std::array<int, 3>, 20> out{};
        std::size_t idx = 0;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k) out[idx++] = {i, j, k};
        return out;
    }();
    return subsets;
}

inline std::size_t subset_index(int i, int j, int k) {
    const auto& subs = three_subsets();
    for (std::size_t s = 0; s < 20; ++s)
        if (subs[s][0] == i && subs[s][1] == j && subs[s][2] == k) return s;
    throw DimensionError("subset_index: not a sorted 3-subset of 1..6");
}

// V_3 basis positions inside the wedge basis, in the fixed order
// (e123, e126, e135, e156, e234, e246, e345, e456).
inline const std::array<std::size_t, 8>& v3_slots() {
    static const std::array<std::size_t, 8> slots = {
        subset_index(1, 2, 3), subset_index(1, 2, 6), subset_index(1, 3, 5),
        subset_index(1, 5, 6), subset_index(2, 3, 4), subset_index(2, 4, 6),
        subset_index(3, 4, 5), subset_index(4, 5, 6)};
    return slots;
}

// The complementary V_P' basis vectors e'_1..e'_6, stored as (slot, sign)
// pairs: e'_j = first + sign * second.
struct PrimePair {
    std::size_t first, second;
    int sign;
};

inline const std::array<PrimePair, 6>& prime_pairs() {
    static const std::array<PrimePair, 6> pairs = {
        PrimePair{subset_index(1, 2, 4), subset_index(2, 3, 6), +1},
        PrimePair{subset_index(1, 2, 5), subset_index(1, 3, 6), -1},
        PrimePair{subset_index(1, 3, 4), subset_index(2, 3, 5), -1},
        PrimePair{subset_index(1, 4, 5), subset_index(3, 5, 6), +1},
        PrimePair{subset_index(2, 4, 5), subset_index(3, 4, 6), -1},
        PrimePair{subset_index(1, 4, 6), subset_index(2, 5, 6), -1}};
    return pairs;
}

// ---------------------------------------------------------------------------
// WedgeVector: an element of wedge^3 Q^6 in the e_{ijk} coordinates.

struct WedgeVector {
    std::array<Rational, 20> coords{};

    Rational& operator[](std::size_t s) { return coords[s]; }
    const Rational& operator[](std::size_t s) const { return coords[s]; }

    Rational coord(int i, int j, int k) const { return coords[subset_index(i, j, k)]; }

    friend WedgeVector operator+(const WedgeVector& a, const WedgeVector& b) {
        WedgeVector r;
        for (std::size_t s = 0; s < 20; ++s) r.coords[s] = a.coords[s] + b.coords[s];
        return r;
    }
    friend WedgeVector operator-(const WedgeVector& a, const WedgeVector& b) {
        WedgeVector r;
        for (std::size_t s = 0; s < 20; ++s) r.coords[s] = a.coords[s] - b.coords[s];
        return r;
    }
    WedgeVector scaled(const Rational& c) const {
        WedgeVector r;
        for (std::size_t s = 0; s < 20; ++s) r.coords[s] = coords[s] * c;
        return r;
    }
    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const WedgeVector& a, const WedgeVector& b) {
        return a.coords == b.coords;
    }
};

// Alternating trilinear wedge of three vectors in Q^6; the coordinates are
// the 3x3 minors.
inline WedgeVector wedge3(const std::vector<Rational>& v1, const std::vector<Rational>& v2,
                          const std::vector<Rational>& v3) {
    if (v1.size() != 6 || v2.size() != 6 || v3.size() != 6)
        throw DimensionError("wedge3: vectors must lie in Q^6");
    WedgeVector w;
    const auto& subs = three_subsets();
    for (std::size_t s = 0; s < 20; ++s) {
        int i = subs[s][0] - 1, j = subs[s][1] - 1, k = subs[s][2] - 1;
        w.coords[s] = v1[i] * (v2[j] * v3[k] - v2[k] * v3[j]) -
                      v1[j] * (v2[i] * v3[k] - v2[k] * v3[i]) +
                      v1[k] * (v2[i] * v3[j] - v2[j] * v3[i]);
    }
    return w;
}

// Right action of a 6x6 matrix on wedge^3 (rows transform as e_i g = row_i).
inline WedgeVector wedge_act(const WedgeVector& w, const MatrixQ& g) {
    if (g.rows() != 6 || g.cols() != 6) throw DimensionError("wedge_act: matrix must be 6x6");
    WedgeVector out;
    const auto& subs = three_subsets();
    for (std::size_t s = 0; s < 20; ++s) {
        if (w.coords[s] == 0) continue;
        auto piece = wedge3(g.row(static_cast<std::size_t>(subs[s][0] - 1)),
                            g.row(static_cast<std::size_t>(subs[s][1] - 1)),
                            g.row(static_cast<std::size_t>(subs[s][2] - 1)));
        out = out + piece.scaled(w.coords[s]);
    }
    return out;
}

// Contraction with e14 + e25 + e36, landing in wedge^5 Q^6 ~ Q^6.  The column
// for wedge^5 is indexed by the missing basis vector.
inline std::vector<Rational> contraction(const WedgeVector& w) {
    std::vector<Rational> out(6, Rational(0));
    const auto& subs = three_subsets();
    static const std::array<std::array<int, 2>, 3> omega = {{{1, 4}, {2, 5}, {3, 6}}};
    for (std::size_t s = 0; s < 20; ++s) {
        if (w.coords[s] == 0) continue;
        for (const auto& pair : omega) {
            int five[5];
            bool disjoint = true;
            for (int x : subs[s])
                if (x == pair[0] || x == pair[1]) disjoint = false;
            if (!disjoint) continue;
            five[0] = subs[s][0];
            five[1] = subs[s][1];
            five[2] = subs[s][2];
            five[3] = pair[0];
            five[4] = pair[1];
            int inversions = 0;
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b)
                    if (five[a] > five[b]) ++inversions;
            int missing = 21 - (five[0] + five[1] + five[2] + five[3] + five[4]);
            Rational term = w.coords[s];
            if (inversions % 2) term = -term;
            out[static_cast<std::size_t>(missing - 1)] += term;
        }
    }
    return out;
}

// 6x20 matrix of the contraction map, for kernel computations.
inline MatrixQ contraction_matrix() {
    MatrixQ m(6, 20);
    for (std::size_t s = 0; s < 20; ++s) {
        WedgeVector basis;
        basis.coords[s] = 1;
        auto img = contraction(basis);
        for (std::size_t row = 0; row < 6; ++row) m.at(row, s) = img[row];
    }
    return m;
}

// Symplectic pairing <v, v'>_P = v wedge v' with e_{123456} sent to 1.
inline Rational pairing_P(const WedgeVector& v, const WedgeVector& w) {
    Rational acc(0);
    const auto& subs = three_subsets();
    for (std::size_t s = 0; s < 20; ++s) {
        if (v.coords[s] == 0) continue;
        for (std::size_t t = 0; t < 20; ++t) {
            if (w.coords[t] == 0) continue;
            int six[6] = {subs[s][0], subs[s][1], subs[s][2], subs[t][0], subs[t][1], subs[t][2]};
            bool dup = false;
            for (int a = 0; a < 6 && !dup; ++a)
                for (int b = a + 1; b < 6; ++b)
                    if (six[a] == six[b]) {
                        dup = true;
                        break;
                    }
            if (dup) continue;
            int inversions = 0;
            for (int a = 0; a < 6; ++a)
                for (int b = a + 1; b < 6; ++b)
                    if (six[a] > six[b]) ++inversions;
            Rational term = v.coords[s] * w.coords[t];
            acc += (inversions % 2) ? -term : term;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// V_P coordinates and the V_3 projection.

// Coordinates of w in the 14-vector basis (8 V_3 slots, then e'_1..e'_6).
// Throws when w does not lie in V_P.
inline std::array<Rational, 14> vp_coords(const WedgeVector& w) {
    std::array<Rational, 14> out{};
    WedgeVector rebuilt;
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = w.coords[v3_slots()[i]];
        rebuilt.coords[v3_slots()[i]] = out[i];
    }
    for (std::size_t j = 0; j < 6; ++j) {
        const auto& p = prime_pairs()[j];
        out[8 + j] = w.coords[p.first];
        rebuilt.coords[p.first] = out[8 + j];
        rebuilt.coords[p.second] = Rational(p.sign) * out[8 + j];
    }
    if (!(rebuilt == w)) throw DomainError("vp_coords: vector is not in V_P");
    return out;
}

// The 8-dimensional 2x2x2 subrepresentation, in the ordered basis
// (e123, e126, e135, e156, e234, e246, e345, e456).
struct V3Vector {
    std::array<Rational, 8> c{};

    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }

    friend V3Vector operator+(const V3Vector& a, const V3Vector& b) {
        V3Vector r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    V3Vector scaled(const Rational& s) const {
        V3Vector r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] * s;
        return r;
    }
    friend bool operator==(const V3Vector& a, const V3Vector& b) { return a.c == b.c; }
};

inline WedgeVector v3_embed(const V3Vector& v) {
    WedgeVector w;
    for (std::size_t i = 0; i < 8; ++i) w.coords[v3_slots()[i]] = v.c[i];
    return w;
}

// Canonical projection V_P -> V_3 (drops the e' components).  Requires
// membership in V_P.
inline V3Vector v3_project(const WedgeVector& w) {
    auto coords = vp_coords(w);
    V3Vector v;
    for (std::size_t i = 0; i < 8; ++i) v.c[i] = coords[i];
    return v;
}

// Reads the V_3 coordinates of a wedge vector known to have no support
// outside the 8 slots (V_3 is invariant under every block-diagonal triple).
inline V3Vector v3_extract_strict(const WedgeVector& w) {
    V3Vector v;
    WedgeVector rebuilt;
    for (std::size_t i = 0; i < 8; ++i) {
        v.c[i] = w.coords[v3_slots()[i]];
        rebuilt.coords[v3_slots()[i]] = v.c[i];
    }
    if (!(rebuilt == w)) throw InternalIdentityError("v3_extract_strict: support outside V_3");
    return v;
}

// v0 = e156 - e246 + e345.
inline V3Vector v0_vector() {
    V3Vector v;
    v.c[3] = 1;
    v.c[5] = -1;
    v.c[6] = 1;
    return v;
}

// ---------------------------------------------------------------------------
// The group side: triples of 2x2 blocks, the GSp6 embedding, gamma_0.

struct TripleSL2 {
    std::array<MatrixQ, 3> h;

    TripleSL2(MatrixQ h1, MatrixQ h2, MatrixQ h3) : h{std::move(h1), std::move(h2), std::move(h3)} {
        for (const auto& b : h)
            if (b.rows() != 2 || b.cols() != 2) throw DimensionError("TripleSL2: blocks must be 2x2");
    }

    static MatrixQ block(Rational a, Rational b, Rational c, Rational d) {
        MatrixQ m(2, 2);
        m.at(0, 0) = std::move(a);
        m.at(0, 1) = std::move(b);
        m.at(1, 0) = std::move(c);
        m.at(1, 1) = std::move(d);
        return m;
    }

    Rational det(std::size_t i) const {
        return h[i].at(0, 0) * h[i].at(1, 1) - h[i].at(0, 1) * h[i].at(1, 0);
    }

    bool in_sl2_triple() const { return det(0) == 1 && det(1) == 1 && det(2) == 1; }

    // H membership: equal nonzero determinants (the similitude nu).
    bool in_h() const { return det(0) != 0 && det(0) == det(1) && det(0) == det(2); }

    Rational nu() const {
        if (!in_h()) throw DomainError("TripleSL2: blocks have unequal determinants");
        return det(0);
    }

    friend TripleSL2 operator*(const TripleSL2& x, const TripleSL2& y) {
        return TripleSL2(x.h[0] * y.h[0], x.h[1] * y.h[1], x.h[2] * y.h[2]);
    }

    // Blockwise involution h -> xi h^{-t} xi^{-1} with xi = diag(1, beta).
    TripleSL2 iota(const Rational& beta) const {
        if (beta == 0) throw DomainError("TripleSL2::iota: beta must be nonzero");
        std::array<MatrixQ, 3> out{MatrixQ(2, 2), MatrixQ(2, 2), MatrixQ(2, 2)};
        for (std::size_t i = 0; i < 3; ++i) {
            Rational d = det(i);
            if (d == 0) throw SingularError("TripleSL2::iota: singular block");
            out[i] = block(h[i].at(1, 1) / d, -h[i].at(1, 0) / (beta * d),
                           -h[i].at(0, 1) * beta / d, h[i].at(0, 0) / d);
        }
        return TripleSL2(out[0], out[1], out[2]);
    }
};

inline TripleSL2 identity_triple() {
    return TripleSL2(MatrixQ::identity(2), MatrixQ::identity(2), MatrixQ::identity(2));
}

// Blockwise embedding into GL_6 (the GSp6 picture interleaves the three
// SL_2 coordinates).
inline MatrixQ embed_triple(const TripleSL2& t) {
    MatrixQ g(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        g.at(i, i) = t.h[i].at(0, 0);
        g.at(i, i + 3) = t.h[i].at(0, 1);
        g.at(i + 3, i) = t.h[i].at(1, 0);
        g.at(i + 3, i + 3) = t.h[i].at(1, 1);
    }
    return g;
}

inline MatrixQ gamma0_matrix() {
    MatrixQ g(6, 6);
    auto set = [&](std::size_t i, std::size_t j, long v) { g.at(i, j) = Rational(v); };
    set(0, 3, -1);
    set(1, 1, 1);
    set(2, 2, 1);
    set(3, 0, 1);
    set(3, 1, 1);
    set(3, 2, 1);
    set(4, 3, -1);
    set(4, 4, 1);
    set(5, 3, -1);
    set(5, 5, 1);
    return g;
}

// Plucker image of a 6x6 representative: wedge of its bottom three rows.
inline WedgeVector pl_point(const MatrixQ& x) {
    return wedge3(x.row(3), x.row(4), x.row(5));
}

// The twist m(g) = diag(1, nu^{-1} I_3, I_2) entering the dot action
// x.g = m(g) x g.
inline MatrixQ m_twist(const Rational& nu) {
    MatrixQ m = MatrixQ::identity(6);
    for (std::size_t i = 1; i <= 3; ++i) m.at(i, i) = Rational(1) / nu;
    return m;
}

inline WedgeVector dot_action_pl(const MatrixQ& x, const TripleSL2& g) {
    return pl_point(m_twist(g.nu()) * x * embed_triple(g));
}

// Plucker point of gamma_0 . iota(h) for h in SL_2^3.
inline WedgeVector orbit_point(const TripleSL2& h) {
    if (!h.in_sl2_triple()) throw DomainError("orbit_point: blocks must have determinant 1");
    return pl_point(gamma0_matrix() * embed_triple(h));
}

// Action of an H element on V_3: nu(h)^{-1} times the wedge-cube action of
// the embedded matrix.  The 2x2x2 structure keeps V_3 stable.
inline V3Vector v3_act(const V3Vector& v, const TripleSL2& h) {
    Rational nu = h.nu();
    WedgeVector moved = wedge_act(v3_embed(v), embed_triple(h));
    return v3_extract_strict(moved).scaled(Rational(1) / nu);
}

inline MatrixQ v3_matrix(const TripleSL2& h) {
    MatrixQ m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        V3Vector basis;
        basis.c[i] = 1;
        auto img = v3_act(basis, h);
        for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = img.c[j];
    }
    return m;
}

inline Rational pairing_P_v3(const V3Vector& v, const V3Vector& w) {
    return pairing_P(v3_embed(v), v3_embed(w));
}

// J xi^{-1} as an H element: blocks [[0, 1/beta], [-1, 0]], similitude 1/beta.
inline TripleSL2 j_xi_inverse(const Rational& beta) {
    if (beta == 0) throw DomainError("j_xi_inverse: beta must be nonzero");
    auto blk = TripleSL2::block(Rational(0), Rational(1) / beta, Rational(-1), Rational(0));
    return TripleSL2(blk, blk, blk);
}

// Twisted symmetric pairing <v, w> := <v, w.(J xi^{-1})>_P on V_3.
inline Rational pairing_sym(const V3Vector& v, const V3Vector& w, const Rational& beta) {
    return pairing_P_v3(v, v3_act(w, j_xi_inverse(beta)));
}

// ---------------------------------------------------------------------------
// Stabilizers.

enum class StabKind { gamma0, v0 };

inline bool stabilizer_membership(StabKind kind, const TripleSL2& g) {
    if (kind == StabKind::gamma0) {
        if (!g.in_h()) throw DomainError("stabilizer_membership: gamma0 kind expects an H element");
        return dot_action_pl(gamma0_matrix(), g) == pl_point(gamma0_matrix());
    }
    if (!g.in_sl2_triple())
        throw DomainError("stabilizer_membership: v0 kind expects an SL_2^3 element");
    return v3_act(v0_vector(), g) == v0_vector();
}

// ---------------------------------------------------------------------------
// Lines, fibers and Lagrangian structure.

struct LineTriple {
    std::array<std::pair<Rational, Rational>, 3> lines;

    explicit LineTriple(std::array<std::pair<Rational, Rational>, 3> l) : lines(std::move(l)) {
        for (const auto& [a, b] : lines)
            if (a == 0 && b == 0) throw DomainError("LineTriple: zero line");
    }

    bool anisotropic(const Rational& beta) const {
        for (const auto& [a, b] : lines)
            if (a * a + beta * b * b == 0) return false;
        return true;
    }
};

// An SL_2 block whose iota-involution has first row proportional to (a, b).
inline MatrixQ line_block(const Rational& a, const Rational& b, const Rational& beta) {
    // h^iota = [[d, -c/beta], [-beta b_entry, a_entry]] for h = [[A,B],[C,D]],
    // so pick D = a, C = -beta b and solve det = 1.
    if (a != 0) return TripleSL2::block(Rational(1) / a, Rational(0), -beta * b, a);
    return TripleSL2::block(Rational(0), Rational(1) / (beta * b), -beta * b, Rational(0));
}

// Basis of the fiber Y_l < V_3: the model fiber span(e156, e246, e345, e456)
// translated by any h whose involution matches the line triple.  The row
// span is independent of the representative.
inline MatrixQ fiber_basis(const LineTriple& l, const Rational& beta = Rational(1)) {
    TripleSL2 h(line_block(l.lines[0].first, l.lines[0].second, beta),
                line_block(l.lines[1].first, l.lines[1].second, beta),
                line_block(l.lines[2].first, l.lines[2].second, beta));
    static const std::array<std::size_t, 4> model_slots = {3, 5, 6, 7};  // e156,e246,e345,e456
    MatrixQ basis(4, 8);
    for (std::size_t row = 0; row < 4; ++row) {
        V3Vector v;
        v.c[model_slots[row]] = 1;
        auto img = v3_act(v, h);
        for (std::size_t j = 0; j < 8; ++j) basis.at(row, j) = img.c[j];
    }
    return basis;
}

enum class PairingKind { plucker, symmetric };

inline MatrixQ lagrangian_gram(const MatrixQ& basis, PairingKind kind,
                               const Rational& beta = Rational(1)) {
    if (basis.rows() != 4 || basis.cols() != 8)
        throw DimensionError("lagrangian_gram: expected a 4x8 basis");
    auto row_vec = [&](std::size_t i) {
        V3Vector v;
        for (std::size_t j = 0; j < 8; ++j) v.c[j] = basis.at(i, j);
        return v;
    };
    MatrixQ gram(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            gram.at(i, j) = (kind == PairingKind::plucker)
                                ? pairing_P_v3(row_vec(i), row_vec(j))
                                : pairing_sym(row_vec(i), row_vec(j), beta);
    return gram;
}

// ---------------------------------------------------------------------------
// The Borel orbit parametrization.

// Borel element with blocks [[1/a_i, a_i t_i / (a1 a2 a3)], [0, a_i]].
inline TripleSL2 borel_element(const std::array<Rational, 3>& a, const std::array<Rational, 3>& t) {
    Rational prod = a[0] * a[1] * a[2];
    if (prod == 0) throw DomainError("borel_element: a_i must be nonzero");
    std::array<MatrixQ, 3> blocks{MatrixQ(2, 2), MatrixQ(2, 2), MatrixQ(2, 2)};
    for (std::size_t i = 0; i < 3; ++i)
        blocks[i] = TripleSL2::block(Rational(1) / a[i], a[i] * t[i] / prod, Rational(0), a[i]);
    return TripleSL2(blocks[0], blocks[1], blocks[2]);
}

// Checks the Borel-orbit parametrization: the GL_2 blocks built from (x, c, y)
// are upper triangular of the stated diagonal shape, and v0 pushed through
// the raw wedge action lands on [x][c] (c1, c2, c3, [c] sum y_i) in the basis
// (e156, -e246, e345, e456).
inline VerificationReport j_parametrization_check(const std::array<Rational, 3>& x,
                                                  const std::array<Rational, 3>& c,
                                                  const std::array<Rational, 3>& y) {
    for (const auto& v : x)
        if (v == 0) throw DomainError("j_parametrization_check: x_i must be nonzero");
    for (const auto& v : c)
        if (v == 0) throw DomainError("j_parametrization_check: c_i must be nonzero");

    Rational cprod = c[0] * c[1] * c[2];
    Rational xprod = x[0] * x[1] * x[2];
    std::array<MatrixQ, 3> blocks{MatrixQ(2, 2), MatrixQ(2, 2), MatrixQ(2, 2)};
    for (std::size_t i = 0; i < 3; ++i) {
        Rational w = x[i] * c[(i + 1) % 3] * c[(i + 2) % 3];
        blocks[i] = TripleSL2::block(x[i], y[i] * w, Rational(0), w);
        // the defining relations of the parametrized set
        if (x[i] / w * c[(i + 1) % 3] * c[(i + 2) % 3] != 1)
            return VerificationReport::failed(
                "j_parametrization", static_cast<std::int64_t>(i),
                Witness{"block " + std::to_string(i), "1", "diagonal relation broken"});
    }
    TripleSL2 b(blocks[0], blocks[1], blocks[2]);

    WedgeVector moved = wedge_act(v3_embed(v0_vector()), embed_triple(b));
    V3Vector got = v3_extract_strict(moved);

    Rational scale = xprod * cprod;
    V3Vector expect;
    expect.c[3] = scale * c[0];                              // e156
    expect.c[5] = -scale * c[1];                             // e246 carries the -1 of the basis
    expect.c[6] = scale * c[2];                              // e345
    expect.c[7] = scale * cprod * (y[0] + y[1] + y[2]);      // e456
    for (std::size_t i = 0; i < 8; ++i) {
        if (got.c[i] != expect.c[i]) {
            return VerificationReport::failed(
                "j_parametrization", static_cast<std::int64_t>(i),
                Witness{"V3 coordinate " + std::to_string(i), to_string(expect.c[i]),
                        to_string(got.c[i])});
        }
    }
    return VerificationReport::passed("j_parametrization", 8);
}

}  // namespace geom
}  // namespace trizeta
