#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quiver/dimvec.hpp"
#include "quiver/representation.hpp"

namespace quiver {

/// A simple summand S(vertex) discarded by a reflection during sweep `step`.
struct Defect {
    int step = 0;
    Index vertex = 0;
    Index multiplicity = 0;

    bool operator==(const Defect&) const = default;
};

struct ReflectionResult {
    Representation rep;
    // dim X_i minus the rank of the assembled map: the multiplicity of S(i)
    // as a direct summand.
    Index defect = 0;
};

/// Sink reflection. The new space at i is the kernel of
/// (X_a)_a : sum_{t(a) = i} X_{s(a)} -> X_i, in the basis returned by
/// `kernel_basis`; each reversed arrow carries its component of the kernel
/// inclusion. The result lives over `X.quiver().reflected_at(i)`.
ReflectionResult reflect_sink(const Representation& x, Index i);

/// Source reflection: the new space at i is the cokernel of
/// X_i -> sum_{s(a) = i} X_{t(a)}, realized by a matrix whose rows span the
/// left kernel; each reversed arrow carries its component of the projection.
ReflectionResult reflect_source(const Representation& x, Index i);

struct SweepResult {
    Representation rep;
    std::vector<Defect> defects;
};

/// Sink reflections along the canonical order. Defects are tagged with step 1
/// and are the multiplicities of the P(i) summands of X.
SweepResult coxeter_plus(const Representation& x);

/// Source reflections along the reversed canonical order; defects count the
/// I(i) summands.
SweepResult coxeter_minus(const Representation& x);

/// tau X = C+ X; throws ProjectiveSummandPresent if the sweep has a defect.
Representation ar_translate(const Representation& x);
/// tau^-1 X = C- X; throws InjectiveSummandPresent if the sweep has a defect.
Representation ar_translate_inverse(const Representation& x);

enum class Direction { Forward, Backward };
std::string_view to_string(Direction d);

enum class ScanVerdict { PreprojectiveFree, PreinjectiveFree, SummandFound, Inconclusive };
std::string_view to_string(ScanVerdict v);

struct DefectReport {
    Direction direction = Direction::Forward;
    int steps_run = 0;
    int bound = 0;
    int sufficient_bound = 0;
    std::vector<Defect> defects;
    ScanVerdict verdict = ScanVerdict::Inconclusive;
};

/// Number of sweeps after which no preprojective (forward) or preinjective
/// (backward) summand of a module with dimension vector x can still show up.
///
/// A summand tau^-s P(i) has dimension vector Phi^-s dim P(i) <= x and shows
/// up in sweep s + 1. On Dynkin quivers each orbit ends once the vector turns
/// negative; otherwise the orbit is cut once its height exceeds that of x,
/// as heights strictly increase along preprojective orbits there.
int sufficient_sweeps(const Quiver& q, const DimVector& x, Direction direction);

/// Iterates C+ (forward) or C- (backward) for up to `bound` sweeps, default
/// `sufficient_sweeps`, stopping early once that bound is passed or the
/// module vanishes.
DefectReport defect_scan(const Representation& x, Direction direction,
                         std::optional<int> bound = std::nullopt);

struct SummandScan {
    DefectReport forward;
    DefectReport backward;
};

SummandScan summand_defect_scan(const Representation& x, std::optional<int> bound = std::nullopt);

struct Lemma9Options {
    int trials = 100;
    long regularity_bound = 50;
    long t_max = 200;
};

struct Lemma9Report {
    long t = 0;
    DimVector dim_r;
    DimVector dim_x;
    Integer euler;
    Index hom_dim = 0;
    Index ext_dim = 0;
    // A nonzero morphism R -> X, when hom_dim > 0.
    std::optional<Morphism> witness;
    Index r_end_dim = 0;
    Index x_end_dim = 0;
    SummandScan r_scan;
    SummandScan x_scan;
};

/// Finite-length run of the argument producing a regular R with Hom(R, X) != 0:
/// take the first t with <Phi^-t x, x> > 0, sample R in general position with
/// dim R = Phi^-t x and, independently, X with dim X = x, and compute
/// Hom(R, X). The defect scans of R check that it has no preprojective or
/// preinjective summand.
Lemma9Report demo_lemma9(const Quiver& q, const DimVector& x, const PrimeField& field,
                         std::uint64_t seed, const Lemma9Options& options = {});

} // namespace quiver
