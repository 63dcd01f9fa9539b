#pragma once

// Decision engine for pseudoeffectivity of the cotangent bundle, positivity
// of the augmented irregularity, and nonvanishing of a relatively minimal
// elliptic surface, each with the rules that produced it.

#include "ellpos/kodaira.hpp"
#include "ellpos/orbifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellpos {

enum class MinimalClass { Abelian, Bielliptic, K3, Enriques, Ruled };

std::string to_string(MinimalClass c);

// minimal-model class for kappa <= 0; genus is the base of the ruling and
// genus 0 means rational
struct MinimalModel {
    MinimalClass kind = MinimalClass::K3;
    int genus = 0;

    bool operator==(const MinimalModel&) const = default;
};

struct SurfaceDescription {
    FiberConfiguration config;
    std::optional<GroupActionData> action;
    std::optional<MinimalModel> minimal_model;

    bool operator==(const SurfaceDescription&) const = default;
};

// kodaira and orbifold checks, plus consistency of the action with the
// configuration (base genus and, for standard actions, the fibre list)
void validate(const SurfaceDescription& s);

enum class Status { Yes, No, Unknown };

std::string to_string(Status s);

struct VerdictReport {
    NumericalInvariants invariants;
    Rational lambda;
    bool base_twist_pseff = false;
    Status omega_pseff = Status::Unknown;
    Status qtilde_positive = Status::Unknown;
    Status nonvanishing = Status::Unknown;
    Status pi1_finite = Status::Unknown;  // Yes or Unknown
    std::vector<std::string> zeta_notes;
    std::vector<std::string> case_trace;
};

VerdictReport evaluate(const SurfaceDescription& s);

} // namespace ellpos
