#pragma once

// Numerical obstruction to sections of I_Z^k (omega_{X/B}(-D))^k.
//
// With a = chi, K_{X/B} - D is Q-linearly equivalent to a F - D0. A section
// would give an effective vertical divisor G numerically equivalent to
// k (a F - D0) whose multiplicity at each point p of Z is at least
// k * ord_p(I_Z). Numerical equivalence of vertical divisors forces, fibre by
// fibre, c_b = r_b F_b - k D0_b, and the fibre degrees to balance:
// t + sum r_b = k a with t >= 0 general fibres. The remaining system is an
// exact linear feasibility problem in the r_b.
//
// Infeasible certifies H^0 = 0. Feasible is numerical only: linear
// equivalence and torsion in Pic are not modelled.

#include "ellpos/kodaira.hpp"
#include "ellpos/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellpos {

// order of the ideal of Z at a singular point of the reduced fibre: the
// Jacobian ideal of xy(x - y) lies in m^2, the other local types give m
int z_ideal_order(LocalType t);

// multiplicity at the point of sum c_i C_i; a cusp or a self-node counts
// its component twice
Rational local_multiplicity(const ZNode& z, const RationalVector& coeffs);

struct VerticalSectionProblem {
    std::vector<FiberType> fibers;
    std::vector<FiberModel> models;
    int k = 1;
    Rational a;  // fibre budget: target class is k (a F - D0)

    // a = chi; throws NonIntegralEuler
    static VerticalSectionProblem from_config(const FiberConfiguration& c, int k);
    // one fibre with its own share a = e(X_b)/12
    static VerticalSectionProblem single_fiber(const FiberType& t, int k);
    static VerticalSectionProblem with_budget(std::vector<FiberType> fibers, int k, Rational a);
};

struct FeasibilityWitness {
    std::vector<RationalVector> component_coeffs;  // per fibre, per component
    Rational general_fibers;                       // t >= 0
};

enum class FeasibilityStatus { Feasible, Infeasible };

std::string to_string(FeasibilityStatus s);

struct FeasibilityVerdict {
    FeasibilityStatus status = FeasibilityStatus::Infeasible;
    int k = 0;
    std::optional<FeasibilityWitness> witness;  // set when Feasible
    bool numerical_only = true;                 // Feasible never certifies a section
};

FeasibilityVerdict vertical_feasibility(const VerticalSectionProblem& p);

// re-checks class equality through the intersection form, the degree
// balance, non-negativity, and every multiplicity constraint
bool check_witness(const VerticalSectionProblem& p, const FeasibilityWitness& w);

struct FiberCaseRow {
    FiberType fiber;
    int k = 0;
    FeasibilityVerdict verdict;
};

// single-fibre problems for II, III, IV, I0* and k = 1..kmax
std::vector<FiberCaseRow> fiber_case_table(int kmax);

// Exact Fourier-Motzkin feasibility of { x : a_r . x >= b_r }. Returns a
// witness or nullopt.
struct LinearInequality {
    RationalVector a;
    Rational b;
};

std::optional<RationalVector> fourier_motzkin(const std::vector<LinearInequality>& system, std::size_t nvars);

} // namespace ellpos
