#pragma once

#include <optional>
#include <string>

#include "realgw/euler_class.hpp"
#include "realgw/graph_enum.hpp"

namespace realgw {

/// Thrown when independent weight-point samples of the localization sum
/// disagree. The sum is a constant in the weights, so disagreement always
/// indicates a bug, never statistical noise; it is a hard error.
class SampleDisagreement : public std::runtime_error {
public:
    explicit SampleDisagreement(const std::string& what) : std::runtime_error(what) {}
};

enum class EvalMode { specialized, symbolic };

/// How the localization sum is assembled.
///  - full_signed: difference of the two domain-involution families, summed
///    over every sign assignment, scaled by the calibration constant.
///  - reduced_plus: all-plus sign assignments only with prefactor
///    +-2^{l-1}; valid when the degree and every insertion are odd.
enum class SumPath { full_signed, reduced_plus };

/// Everything that determines one invariant computation.
struct InvariantQuery {
    int M = 2;               // generator count; target P^{2M-1}; canonical sign needs M even
    int d = 1;               // curve degree
    Involution phi = Involution::tau;
    std::vector<int> t;      // insertion exponents, one per conjugate pair of marked points
    EvalMode mode = EvalMode::specialized;
    int samples = 3;         // weight points that must agree exactly
    long seed = 0;
    SumPath path = SumPath::full_signed;
    HalfEdgeSign parity = HalfEdgeSign::canonical;
};

struct InvariantResult {
    Rational value;
    long graph_count_tau = 0;
    long graph_count_eta = 0;
    int samples_agreed = 0;
    bool dimension_ok = true;
};

/// Optional engine knobs that are not part of the mathematical query.
struct EngineOptions {
    std::string census_cache_dir;  // empty: no on-disk census cache
};

/// True iff the insertion degrees saturate the virtual dimension:
/// sum t_k = M (d + 1) - 2 + l.
bool dimension_check(int M, int d, const std::vector<int>& t);

/// Global calibration constant applied to the signed full sum: each fixed
/// locus corresponds to exactly two enumerated half-graphs (one per choice of
/// half), so the sum over all root labels and sign assignments double-counts
/// the loci. Frozen against the degree-1 anchor.
const Rational& localization_calibration();

/// The invariant. Specialized mode evaluates the localization sum at
/// `samples` generic weight points (deterministically reseeding past poles)
/// and requires exact agreement; symbolic mode sums rational functions and
/// is guarded to small instances.
InvariantResult invariant(const InvariantQuery& q, const EngineOptions& opts = {});

/// Which index range the degree-1 closed form sums over; both evaluate to
/// the same number.
enum class RootSumRange { generators, all_labels };

/// The closed-form degree-1 sum: the independent oracle for the calibration.
/// Evaluated exactly at `samples` weight points that must agree.
Rational degree1_closed_form(int M, const std::vector<int>& t,
                             RootSumRange range = RootSumRange::generators, int samples = 3,
                             long seed = 0);

/// The partial-fractions identity: sum over the M distinct squared weights x_g of
/// x_g^{M-1} / prod_{h != g} (x_g - x_h). Exactly 1 at any generic point.
Rational residue_identity(int M, const WeightPoint& point);
Rational residue_identity(int M, int samples = 3, long seed = 0);

/// Classical sanity harness: counts the lines through two generic points of
/// P^{2M-1} by full (complex) torus localization on the degree-1 two-pointed
/// moduli space, exercising the edge, vertex and psi machinery without the
/// half-edge. Returns exactly 1.
Rational complex_line_check(int M, int samples = 3, long seed = 0);

}  // namespace realgw
