#pragma once

// Twisted symmetric differentials on C x E with C hyperelliptic, invariant
// under (i_C, -1), and the local conditions they must satisfy at the A1
// points of the quotient to extend over its minimal resolution.
//
// Conventions
//   C: y^2 = h(x), deg h = 2g + 2, all roots rational and marked; the
//      Weierstrass points are (r, 0), the twist divisor is A_C = inf+ + inf-.
//   H^0(C, omega^l(j A_C)) has basis x^a y^b (dx/y)^l, b in {0, 1},
//      a + b(g + 1) <= l(g - 1) + j.
//   E: the twisted sections s_{j,k} are modelled near the marked origin by
//      the germ z2^k, k in {0..j-2} u {j} (k = 0 alone when j = 0).
//   Involution signs: x -> x, y -> -y, dx/y -> -dx/y, z2^k -> (-1)^k z2^k,
//      dz2 -> -dz2.
// Only the fixed points (w, 0), w a Weierstrass point, are imposed, so
// invariant_dim is an upper bound for the dimension of sections that
// descend to the resolved quotient.

#include "ellpos/local_differential.hpp"
#include "ellpos/rational.hpp"

#include <vector>

namespace ellpos {

inline constexpr int kDefaultDeskScaleCap = 10;

class HyperellipticModel {
public:
    // h = prod (x - r) over 2g + 2 distinct rational roots
    HyperellipticModel(int genus, std::vector<Rational> roots);
    // h given by coefficients (low degree first) with all roots marked
    HyperellipticModel(int genus, std::vector<Rational> coefficients, std::vector<Rational> roots);

    // roots 0, 1, ..., 2g + 1
    static HyperellipticModel standard(int genus);

    int genus() const { return genus_; }
    const std::vector<Rational>& coefficients() const { return h_; }
    const std::vector<Rational>& roots() const { return roots_; }

private:
    void validate() const;

    int genus_;
    std::vector<Rational> h_;
    std::vector<Rational> roots_;
};

struct TwistedBasisElement {
    int a = 0;  // power of x
    int b = 0;  // power of y, 0 or 1
    int l = 0;  // symmetric degree on C
    int j = 0;  // twist level

    bool operator==(const TwistedBasisElement&) const = default;
};

std::vector<TwistedBasisElement> curve_basis(int g, int l, int j);

// {0, ..., j-2} u {j}; requires j >= 1
std::vector<int> elliptic_orders(int j);

// Expansion of a global basis tensor x^a y^b (dx/y)^l * s_{j,k} dz2^(i-l)
// at the fixed point over the Weierstrass root with index root_index,
// truncated to graded parts n < i (higher parts never obstruct).
LocalDifferential localize(const HyperellipticModel& model, std::size_t root_index, const TwistedBasisElement& e,
                           int k, int i);

// dimension of the invariant twisted symmetric differentials of degree i
// whose localisations pass blowup_holomorphy at every Weierstrass point
int invariant_dim(const HyperellipticModel& model, int i, int j, int cap = kDefaultDeskScaleCap);

// invariant_dim(standard model of genus g, i, 0)
int sakai_check(int g, int i, int cap = kDefaultDeskScaleCap);

// an epsilon as in the vanishing argument exists:
// (i - 2j)(2g - 1) > i(2g - 2) and i >= 2j; requires zcount >= 2g - 1
bool guaranteed_vanishing(int g, int zcount, int i, int j);

enum class KummerResidual { Trivial, F };

struct KummerTensorPower {
    int ideal_exponent = 0;
    KummerResidual residual = KummerResidual::Trivial;

    bool operator==(const KummerTensorPower&) const = default;
};

// F^i = I^(i/2) (i even), I^((i-1)/2) F (i odd), where F is the module of
// odd polynomials over the A1 ring C[u^2, uv, v^2] and I its maximal ideal
KummerTensorPower kummer_tensor_power(int i);

// graded dimensions, degrees 0..max_degree, of the submodule of C[u, v]
// described by the tag
std::vector<int> kummer_graded_dims(const KummerTensorPower& tag, int max_degree);

} // namespace ellpos
