#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quiver/forms.hpp"
#include "quiver/quiver.hpp"
#include "quiver/scalar.hpp"

namespace quiver {

/// (s_i x)_i = -x_i + sum over arrows incident to i of the other endpoint's
/// coordinate; other coordinates are unchanged.
DimVector simple_reflection(const Quiver& q, Index i, const DimVector& x);
IntMatrix reflection_matrix(const Quiver& q, Index i);

/// Phi = s_{v_n} ... s_{v_1} for the canonical order v_1, ..., v_n (sinks
/// first), so s_{v_1} is applied first.
IntMatrix coxeter_matrix(const Quiver& q);
IntMatrix inverse_coxeter_matrix(const Quiver& q);

/// Phi^t x for any integer t.
DimVector coxeter_apply(const Quiver& q, const DimVector& x, long t);

enum class Regularity { Regular, NotRegular, Undetermined };
std::string_view to_string(Regularity r);

struct NegativeWitness {
    long t = 0;
    Index vertex = 0;
    Integer value;
};

/// Floating-point bound for one direction (Phi for t > T, Phi^-1 for t < -T).
///
/// With y = Phi^T x scaled to unit max-norm, Phi^s y = a rho^s v + M^s y where
/// v is the dominant eigenvector (min entry `min_eigvec` > 0) and M the
/// complementary part. `tail_bound` bounds |M^s y|_inf / rho^s for all s >= 1,
/// using |M^block|_inf <= rho^block / 2. Positivity for all s holds when
/// margin = a * min_eigvec - tail_bound exceeds `error_radius`.
struct SpectralBound {
    double rho = 0;
    double coefficient = 0;
    double min_eigvec = 0;
    double tail_bound = 0;
    double margin = 0;
    double error_radius = 0;
    int block = 0;
};

struct SpectralCertificate {
    SpectralBound forward;
    SpectralBound backward;
};

/// Verdict on "Phi^t x >= 0 for all integers t".
///
/// The exact scan covers |t| <= bound_used. Regular additionally needs either
/// an exact period (Phi^p x = x with p <= bound_used) or a spectral
/// certificate for both tails.
struct RegularityCertificate {
    Regularity verdict = Regularity::Undetermined;
    long bound_used = 0;
    std::optional<NegativeWitness> witness;
    std::optional<long> period;
    std::optional<SpectralCertificate> spectral;
};

RegularityCertificate regularity_check(const Quiver& q, const DimVector& x, long bound = 50);

/// Tail certificate for x > 0 under powers of `step`, starting from the exact
/// vector y = step^T x. Returns nothing when the dominant eigenvalue is not a
/// simple real eigenvalue above 1 with a positive eigenvector, or when the
/// margin does not beat the error radius.
std::optional<SpectralBound> spectral_tail_bound(const IntMatrix& step, const DimVector& y);

struct Lemma2Result {
    // Smallest t >= 0 with <Phi^-t x, x> > 0.
    long first_positive_t = 0;
    // Smallest t <= t_max from which the pairing is positive for `window`
    // further steps; empty if there is none.
    std::optional<long> stable_t;
    long window = 50;
    // (t, <Phi^-t x, x>) for t = stable_t .. stable_t + window, or for
    // first_positive_t .. t_max when there is no stable_t.
    std::vector<std::pair<long, Integer>> trace;
};

/// Requires x nonzero with a Regular verdict. Throws NoPositiveT when no
/// t <= t_max gives a positive pairing.
Lemma2Result lemma2_scan(const Quiver& q, const DimVector& x, long t_max = 200, long window = 50,
                         long regularity_bound = 50);

enum class RootKind { RealRoot, ImaginaryRoot, NotARoot };
std::string_view to_string(RootKind k);

struct RootClass {
    RootKind kind = RootKind::NotARoot;
    bool zero_root = false;
    // Vertices of the height-lowering reflections, in application order.
    std::vector<Index> reduction_trace;
    // Where the reduction stopped.
    DimVector reduced;
};

/// Height-lowering reflection reduction: at each step reflect at the smallest
/// i with (x, e_i) > 0. Ends at a simple root (RealRoot), in the fundamental
/// region with connected support (ImaginaryRoot), or leaves the positive cone
/// or stops on a disconnected support (NotARoot).
RootClass classify_root(const Quiver& q, const DimVector& x);

/// x = c z for some c >= 2 and some zero root z (tits_form(z) = 0).
bool is_proper_multiple_of_zero_root(const Quiver& q, const DimVector& x);

/// Nonnegative nonzero vectors of height <= h, lexicographically ascending.
std::vector<DimVector> positive_vectors(Index n, long h);

struct ConjectureCandidate {
    DimVector x;
    Integer tits;
    RegularityCertificate regularity;
};

/// Imaginary roots of height <= h that are not proper multiples of zero
/// roots, each with its regularity verdict. Requires a wild quiver.
std::vector<ConjectureCandidate> conjecture_scan(const Quiver& q, long height_bound,
                                                 long regularity_bound = 50);

bool support_connected(const Quiver& q, const DimVector& x);

} // namespace quiver
