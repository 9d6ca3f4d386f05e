#include "realgw/localizer.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

#include "realgw/census_io.hpp"

namespace realgw {

bool dimension_check(int M, int d, const std::vector<int>& t) {
    long sum = 0;
    for (int tk : t) sum += tk;
    return sum == static_cast<long>(M) * (d + 1) - 2 + static_cast<long>(t.size());
}

const Rational& localization_calibration() {
    static const Rational kappa(1, 2);
    return kappa;
}

namespace {

constexpr int kMaxPoleRetries = 64;

long seed_for_sample(long base, int sample) { return base + 1000003L * sample; }

using CensusPtr = std::shared_ptr<const std::vector<HalfGraph>>;

/// Censuses are deterministic in the query, so completed ones are kept for
/// the life of the process (written once, read-only thereafter).
CensusPtr census_for(const GraphQuery& q, const EngineOptions& opts) {
    static std::mutex mu;
    static std::map<std::string, CensusPtr> memory;
    std::ostringstream key;
    key << q.M << "|" << q.d << "|" << q.l << "|" << involution_name(q.phi) << "|"
        << involution_name(q.c) << "|" << sign_mode_name(q.sign_mode);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memory.find(key.str());
        if (it != memory.end()) return it->second;
    }
    CensusPtr census = std::make_shared<const std::vector<HalfGraph>>(
        opts.census_cache_dir.empty() ? half_graph_census(q)
                                      : cached_census(q, opts.census_cache_dir));
    std::lock_guard<std::mutex> lock(mu);
    return memory.emplace(key.str(), census).first->second;
}

struct Family {
    CensusPtr graphs;
    std::vector<long> denominators;  // combinatorial denominators, precomputed once

    std::size_t size() const { return graphs ? graphs->size() : 0; }
};

Family make_family(const GraphQuery& q, const EngineOptions& opts) {
    Family fam;
    fam.graphs = census_for(q, opts);
    fam.denominators.reserve(fam.graphs->size());
    for (const HalfGraph& g : *fam.graphs) fam.denominators.push_back(combinatorial_denominator(g));
    return fam;
}

struct CensusSet {
    Family tau_family;
    Family eta_family;  // unused on the reduced path
    bool reduced = false;
};

CensusSet build_censuses(const InvariantQuery& q, const EngineOptions& opts) {
    CensusSet cs;
    const int l = static_cast<int>(q.t.size());
    if (q.path == SumPath::reduced_plus) {
        cs.reduced = true;
        Involution c = q.phi == Involution::tau ? Involution::tau : Involution::eta;
        cs.tau_family = make_family({q.M, q.d, l, q.phi, c, SignMode::plus_only}, opts);
        return cs;
    }
    cs.tau_family = make_family({q.M, q.d, l, q.phi, Involution::tau, SignMode::all_signs}, opts);
    cs.eta_family = make_family({q.M, q.d, l, q.phi, Involution::eta, SignMode::all_signs}, opts);
    return cs;
}

template <class F>
typename F::Scalar family_sum(const F& f, const Family& fam, const std::vector<int>& t,
                              HalfEdgeSign sign, Involution c) {
    ParityMode mode{sign, c};
    typename F::Scalar total = f.from_rational(Rational(0));
    for (std::size_t i = 0; i < fam.size(); ++i)
        total += locus_value(f, (*fam.graphs)[i], t, mode, fam.denominators[i]);
    return total;
}

template <class F>
typename F::Scalar localization_total(const F& f, const InvariantQuery& q, const CensusSet& cs) {
    const int l = static_cast<int>(q.t.size());
    if (cs.reduced) {
        Involution c = q.phi == Involution::tau ? Involution::tau : Involution::eta;
        typename F::Scalar s = family_sum(f, cs.tau_family, q.t, q.parity, c);
        Rational prefactor = l >= 1 ? pow(Rational(2), static_cast<unsigned>(l - 1)) : Rational(1, 2);
        if (q.phi == Involution::eta) prefactor = -prefactor;
        return s * f.from_rational(prefactor);
    }
    typename F::Scalar s_tau = family_sum(f, cs.tau_family, q.t, q.parity, Involution::tau);
    typename F::Scalar s_eta = family_sum(f, cs.eta_family, q.t, q.parity, Involution::eta);
    return (s_tau - s_eta) * f.from_rational(localization_calibration());
}

Rational evaluate_at_generic_points(const WeightSystem& ws, const InvariantQuery& q,
                                    const CensusSet& cs, int samples, long seed,
                                    int* samples_agreed) {
    std::optional<Rational> common;
    for (int s = 0; s < samples; ++s) {
        std::optional<Rational> value;
        long base = seed_for_sample(seed, s);
        for (int bump = 0; bump < kMaxPoleRetries && !value; ++bump) {
            WeightPoint p = sample_weight_point(ws.M(), base + bump);
            try {
                NumericMemo memo;
                NumericField f{ws, p, &memo};
                value = localization_total(f, q, cs);
            } catch (const ZeroDivide&) {
                // pole at this point: deterministic reseed
            }
        }
        if (!value) throw std::runtime_error("no generic weight point found after reseeding");
        if (!common) {
            common = value;
        } else if (*common != *value) {
            throw SampleDisagreement("weight-point samples disagree: " + common->to_string() +
                                     " vs " + value->to_string());
        }
    }
    if (samples_agreed) *samples_agreed = samples;
    return *common;
}

}  // namespace

InvariantResult invariant(const InvariantQuery& q, const EngineOptions& opts) {
    if (q.M < 1 || q.d < 1) throw std::invalid_argument("bad invariant query");
    for (int tk : q.t)
        if (tk < 1) throw std::invalid_argument("insertion exponents must be positive");
    if (q.parity == HalfEdgeSign::canonical && q.M % 2 != 0)
        throw std::invalid_argument(
            "canonical sign convention needs an even generator count; use the general parity mode");
    if (q.path == SumPath::reduced_plus) {
        bool odd = q.d % 2 == 1 &&
                   std::all_of(q.t.begin(), q.t.end(), [](int tk) { return tk % 2 == 1; });
        if (!odd)
            throw std::invalid_argument("the reduced sum applies only to odd degree and odd insertions");
    }

    InvariantResult res;
    if (!dimension_check(q.M, q.d, q.t)) {
        res.dimension_ok = false;
        return res;
    }

    CensusSet cs = build_censuses(q, opts);
    res.graph_count_tau = cs.reduced && q.phi == Involution::eta ? 0
                                                                 : static_cast<long>(cs.tau_family.size());
    res.graph_count_eta = cs.reduced
                              ? (q.phi == Involution::eta ? static_cast<long>(cs.tau_family.size()) : 0)
                              : static_cast<long>(cs.eta_family.size());

    WeightSystem ws(q.M);
    if (q.mode == EvalMode::symbolic) {
        if (q.M > 2 || q.d > 3)
            throw std::invalid_argument("symbolic mode is guarded to M <= 2 and d <= 3");
        SymbolicField f{ws};
        RationalFunction total = localization_total(f, q, cs);
        if (!total.is_constant())
            throw std::logic_error("localization sum is not constant in the weights");
        res.value = total.constant_value();
        res.samples_agreed = 0;
        return res;
    }

    if (q.samples < 3) throw std::invalid_argument("specialized mode needs at least 3 samples");
    res.value = evaluate_at_generic_points(ws, q, cs, q.samples, q.seed, &res.samples_agreed);
    return res;
}

Rational degree1_closed_form(int M, const std::vector<int>& t, RootSumRange range, int samples,
                             long seed) {
    if (!dimension_check(M, 1, t)) throw std::invalid_argument("insertions violate the dimension gate");
    for (int tk : t)
        if (tk % 2 != 1) throw std::invalid_argument("closed form needs odd insertions");
    const int l = static_cast<int>(t.size());
    long tsum = 0;
    for (int tk : t) tsum += tk;

    WeightSystem ws(M);
    std::optional<Rational> common;
    for (int s = 0; s < samples; ++s) {
        std::optional<Rational> value;
        long base = seed_for_sample(seed, s);
        for (int bump = 0; bump < kMaxPoleRetries && !value; ++bump) {
            WeightPoint p = sample_weight_point(M, base + bump);
            try {
                Rational sum(0);
                if (range == RootSumRange::generators) {
                    for (int g = 0; g < M; ++g) {
                        const Rational& v = p.values[g];
                        Rational prod(1);
                        for (int h = 0; h < M; ++h) {
                            if (h == g) continue;
                            prod *= p.values[h] * p.values[h] - v * v;
                        }
                        sum += pow(v, static_cast<unsigned>(tsum)) /
                               (Rational(2) * v * prod * pow(Rational(2) * v, static_cast<unsigned>(l - 1)));
                    }
                    sum *= -pow(Rational(2), static_cast<unsigned>(l));
                } else {
                    for (int i = 1; i <= 2 * M; ++i) {
                        Rational li = ws.lambda_at(p, i);
                        Rational prod(1);
                        for (int j = 1; j <= 2 * M; ++j) {
                            if (j == i || (j - i) % 2 != 0) continue;
                            Rational lj = ws.lambda_at(p, j);
                            prod *= lj * lj - li * li;
                        }
                        sum += pow(li, static_cast<unsigned>(tsum)) /
                               (Rational(2) * li * prod * pow(Rational(2) * li, static_cast<unsigned>(l - 1)));
                    }
                    sum *= -pow(Rational(2), static_cast<unsigned>(l - 1));
                }
                value = sum;
            } catch (const ZeroDivide&) {
            }
        }
        if (!value) throw std::runtime_error("no generic weight point found after reseeding");
        if (!common) common = value;
        else if (*common != *value)
            throw SampleDisagreement("closed-form samples disagree");
    }
    return *common;
}

Rational residue_identity(int M, const WeightPoint& point) {
    if (point.size() != M) throw std::invalid_argument("weight point arity mismatch");
    Rational sum(0);
    for (int g = 0; g < M; ++g) {
        Rational x = point.values[g] * point.values[g];
        Rational prod(1);
        for (int h = 0; h < M; ++h) {
            if (h == g) continue;
            prod *= x - point.values[h] * point.values[h];
        }
        sum += pow(x, static_cast<unsigned>(M - 1)) / prod;  // throws ZeroDivide on coincident squares
    }
    return sum;
}

Rational residue_identity(int M, int samples, long seed) {
    std::optional<Rational> common;
    for (int s = 0; s < samples; ++s) {
        std::optional<Rational> value;
        long base = seed_for_sample(seed, s);
        for (int bump = 0; bump < kMaxPoleRetries && !value; ++bump) {
            try {
                value = residue_identity(M, sample_weight_point(M, base + bump));
            } catch (const ZeroDivide&) {
            }
        }
        if (!value) throw std::runtime_error("no generic weight point found after reseeding");
        if (!common) common = value;
        else if (*common != *value)
            throw SampleDisagreement("residue-identity samples disagree");
    }
    return *common;
}

Rational complex_line_check(int M, int samples, long seed) {
    WeightSystem ws(M);
    const int n = 2 * M;
    const int insertion = 2 * M - 1;  // point class H^{2M-1}
    std::optional<Rational> common;
    for (int s = 0; s < samples; ++s) {
        std::optional<Rational> value;
        long base = seed_for_sample(seed, s);
        for (int bump = 0; bump < kMaxPoleRetries && !value; ++bump) {
            WeightPoint p = sample_weight_point(M, base + bump);
            try {
                NumericField f{ws, p};
                Rational total(0);
                // Degree-1 graphs: one edge {a, b}, two marked points on its
                // endpoints; a < b fixes one representative per class.
                for (int a = 1; a <= n; ++a) {
                    for (int b = a + 1; b <= n; ++b) {
                        for (int m1 = 0; m1 < 2; ++m1) {
                            for (int m2 = 0; m2 < 2; ++m2) {
                                int label1 = m1 == 0 ? a : b;
                                int label2 = m2 == 0 ? a : b;
                                Rational wa = f.flag_w(Flag{a, b, 1});
                                Rational wb = f.flag_w(Flag{b, a, 1});
                                int val_a = 1 + (m1 == 0 ? 1 : 0) + (m2 == 0 ? 1 : 0);
                                int val_b = 1 + (m1 == 1 ? 1 : 0) + (m2 == 1 ? 1 : 0);
                                Rational num = pow_scalar(f, f.lambda(label1), insertion) *
                                               pow_scalar(f, f.lambda(label2), insertion);
                                if (val_a == 1) num *= wa;
                                if (val_b == 1) num *= wb;
                                if (val_a >= 3) num *= vertex_integral(f, {wa}, val_a);
                                if (val_b >= 3) num *= vertex_integral(f, {wb}, val_b);
                                total += num / edge_contribution(f, a, b, 1);
                            }
                        }
                    }
                }
                value = total;
            } catch (const ZeroDivide&) {
            }
        }
        if (!value) throw std::runtime_error("no generic weight point found after reseeding");
        if (!common) common = value;
        else if (*common != *value)
            throw SampleDisagreement("line-count samples disagree");
    }
    return *common;
}

}  // namespace realgw
