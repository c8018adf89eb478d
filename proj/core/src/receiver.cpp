// SPDX-License-Identifier: Apache-2.0
//
// zakotfs - delay-Doppler signal processing with Zadoff-Chu spread pilots
// Copyright (C) 2026 The zakotfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "zakotfs/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseQR>
#include <Eigen/OrderingMethods>

#include "zakotfs/ambiguity.hpp"
#include "zakotfs/errors.hpp"
#include "zakotfs/modular.hpp"
#include "zakotfs/zak.hpp"

namespace zakotfs {

const DDGrid& pilot_grid(const SpreadPilot& p) {
    return std::visit([](const auto& v) -> const DDGrid& { return v.grid(); }, p);
}

DDSignal pilot_signal(const SpreadPilot& p) {
    if (const auto* c = std::get_if<ChirpPilot>(&p)) return chirp_pilot_signal(*c);
    return zc_pilot_signal(std::get<ZCPilot>(p));
}

bool on_self_ambiguity_support(const SpreadPilot& p, long long k, long long l) {
    const DDGrid& g = pilot_grid(p);
    const std::int64_t M = g.M(), N = g.N(), MN = g.size();
    if (const auto* z = std::get_if<ZCPilot>(&p)) return mod(l + mul_mod(z->root(), k, MN), MN) == 0;
    const auto& c = std::get<ChirpPilot>(p);
    const std::int64_t two_aM = mul_mod(2 * c.a(), M, N);
    const std::int64_t slope = mod(*mod_inverse(two_aM, N) - two_aM, N);
    const bool delay_ok = mod(k - mul_mod(slope, l, N), N) == 0;
    const bool doppler_ok = mod(l - mul_mod(mul_mod(2 * c.b(), N, M), k, M), M) == 0;
    return delay_ok && doppler_ok;
}

ReadoffRegion ReadoffRegion::around(int k_max, int l_max, int margin) {
    return ReadoffRegion{-margin, k_max + margin, -l_max - margin, l_max + margin};
}

void check_readoff(const SpreadPilot& p, const ReadoffRegion& r) {
    const int dk = r.k_hi - r.k_lo, dl = r.l_hi - r.l_lo;
    const DDGrid& g = pilot_grid(p);
    if (dk >= g.size() || dl >= g.size())
        throw CrystallizationError("read-off region is wider than a full period");
    for (int k = -dk; k <= dk; ++k)
        for (int l = -dl; l <= dl; ++l) {
            if (k == 0 && l == 0) continue;
            if (on_self_ambiguity_support(p, k, l))
                throw CrystallizationError("read-off region aliases with the self-ambiguity translate at (" +
                                           std::to_string(k) + ", " + std::to_string(l) + ")");
        }
}

ChannelEstimate estimate_channel(const DDSignal& y, const SpreadPilot& pilot, double pilot_energy,
                                 const ReadoffRegion& region, double rel_threshold) {
    if (!(pilot_energy > 0.0)) throw PreconditionError("estimate_channel: pilot energy must be positive");
    if (!(y.grid() == pilot_grid(pilot))) throw DimensionError("estimate_channel: grid mismatch");
    check_readoff(pilot, region);

    const auto A = ambiguity_window(y, pilot_signal(pilot), region.k_lo, region.k_hi, region.l_lo, region.l_hi);
    const double scale = 1.0 / std::sqrt(pilot_energy);
    double peak = 0.0;
    for (const auto& v : A) peak = std::max(peak, std::abs(v) * scale);

    std::vector<Tap> taps;
    std::size_t i = 0;
    for (int k = region.k_lo; k <= region.k_hi; ++k)
        for (int l = region.l_lo; l <= region.l_hi; ++l, ++i) {
            const cplx v = A[i] * scale;
            if (peak > 0.0 && std::abs(v) >= rel_threshold * peak) taps.push_back(Tap{k, l, v});
        }
    return ChannelEstimate{TapSet(std::move(taps)), region};
}

DDSignal cancel_pilot(const DDSignal& y, const TapSet& est, const DDSignal& unit_pilot, double pilot_energy) {
    if (est.empty()) return y;
    return y - twisted_convolve(est, unit_pilot * cplx{std::sqrt(pilot_energy), 0.0});
}

cplx qam4_decide(cplx s) {
    const double a = 1.0 / std::sqrt(2.0);
    return {s.real() >= 0.0 ? a : -a, s.imag() >= 0.0 ? a : -a};
}

std::vector<cplx> random_qam4(std::size_t n, std::mt19937_64& rng) {
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> out(n);
    for (auto& s : out) {
        const auto bits = rng();
        s = {(bits & 1u) ? a : -a, (bits & 2u) ? a : -a};
    }
    return out;
}

Detection lmmse_detect(const DDSignal& y_data, const TapSet& h, double var) {
    if (var < 0.0) throw PreconditionError("lmmse_detect: negative variance");
    const DDGrid& g = y_data.grid();
    const auto n = static_cast<Eigen::Index>(g.size());
    const SparseMatrix H = build_time_matrix(h, g);
    const auto yt = inverse_zak_transform(y_data);
    Eigen::VectorXcd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y[i] = yt.samples()[static_cast<std::size_t>(i)];

    Eigen::VectorXcd x;
    if (var > 0.0) {
        SparseMatrix A = SparseMatrix(H.adjoint()) * H;
        for (Eigen::Index i = 0; i < n; ++i) A.coeffRef(i, i) += var;
        Eigen::SimplicialLLT<SparseMatrix, Eigen::Lower, Eigen::AMDOrdering<int>> llt(A);
        if (llt.info() != Eigen::Success) throw NumericalError("lmmse_detect: regularized system is not positive definite");
        x = llt.solve(H.adjoint() * y);
    } else {
        SparseMatrix Hc = H;
        Hc.makeCompressed();
        Eigen::SparseQR<SparseMatrix, Eigen::COLAMDOrdering<int>> qr;
        qr.compute(Hc);
        if (qr.info() != Eigen::Success || qr.rank() < n)
            throw NumericalError("lmmse_detect: channel matrix is singular and no regularization was given");
        x = qr.solve(y);
    }
    if (!x.allFinite()) throw NumericalError("lmmse_detect: solution is not finite");

    std::vector<cplx> xs(x.data(), x.data() + n);
    const DDSignal soft = zak_transform(TDSignal(std::move(xs), g.bandwidth(), 1), g);
    Detection d;
    d.soft.assign(soft.values().begin(), soft.values().end());
    d.symbols.reserve(d.soft.size());
    for (const auto& s : d.soft) d.symbols.push_back(qam4_decide(s));
    return d;
}

double nmse(const TapSet& est, const TapSet& truth) {
    const double ref = truth.energy();
    if (!(ref > 0.0)) throw NumericalError("nmse: true channel has zero energy");
    const TapSet diff = add(est, truth, cplx{-1.0, 0.0});
    return diff.energy() / ref;
}

double ber(std::span<const cplx> decisions, std::span<const cplx> truth) {
    if (decisions.size() != truth.size()) throw DimensionError("ber: length mismatch");
    if (truth.empty()) return 0.0;
    std::size_t errors = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        errors += (decisions[i].real() >= 0.0) != (truth[i].real() >= 0.0);
        errors += (decisions[i].imag() >= 0.0) != (truth[i].imag() >= 0.0);
    }
    return static_cast<double>(errors) / (2.0 * static_cast<double>(truth.size()));
}

namespace {

// Detector variance: thermal noise, plus the energy left by the estimation
// error on the pilot and on the data. Each read-off tap carries an error of
// variance v / Ep where v is the per-sample interference seen by the
// correlator.
double modeled_variance(double noise, std::size_t taps, double v, double Ep, double MN) {
    const double r = static_cast<double>(taps);
    return noise + r * v / MN + r * v / Ep;
}

// Expected |d - d_hat|^2 per 4-QAM symbol, from the spread of the soft
// outputs around their decisions (Gaussian approximation).
double expected_decision_error(const Detection& det) {
    double eta = 0.0;
    for (std::size_t i = 0; i < det.soft.size(); ++i) eta += std::norm(det.soft[i] - det.symbols[i]);
    eta /= static_cast<double>(det.soft.size());
    if (!(eta > 0.0)) return 0.0;
    const double per_quadrature = 0.5 * std::erfc(1.0 / std::sqrt(2.0 * eta));
    return 4.0 * per_quadrature;
}

}  // namespace

TurboResult turbo_iterate(const DDSignal& y, const FramePlan& plan, int iterations, const TapSet* true_channel,
                          std::span<const cplx> true_symbols) {
    if (iterations < 1) throw PreconditionError("turbo_iterate: need at least one iteration");
    const DDGrid& g = y.grid();
    const double MN = g.size();
    const double Ep = plan.pilot_energy;
    const DDSignal p = pilot_signal(plan.pilot);
    TurboResult out;

    ChannelEstimate est = estimate_channel(y, plan.pilot, Ep, plan.region, plan.tap_threshold);
    Detection det;
    for (int it = 0; it < iterations; ++it) {
        double var = 0.0;
        if (it == 0) {
            const DDSignal y_data = cancel_pilot(y, est.taps, p, Ep);
            var = modeled_variance(plan.noise_variance, est.taps.size(), y_data.energy() / MN, Ep, MN);
            det = lmmse_detect(y_data, est.taps, var);
        } else {
            const DDSignal data_hat = data_frame_signal(det.symbols, g);
            est = estimate_channel(y - twisted_convolve(est.taps, data_hat), plan.pilot, Ep, plan.region,
                                   plan.tap_threshold);
            const DDSignal y_data = cancel_pilot(y, est.taps, p, Ep);
            // What survives removal of pilot and data estimates is noise, residual
            // pilot and the footprint of wrong decisions; only the last is still
            // signal for the detector, so its expected energy is taken out.
            const double v = (y_data - twisted_convolve(est.taps, data_hat)).energy() / MN;
            const double measured = v - est.taps.energy() * expected_decision_error(det);
            var = std::max(modeled_variance(plan.noise_variance, est.taps.size(), v, Ep, MN),
                           std::max(plan.noise_variance, measured));
            det = lmmse_detect(y_data, est.taps, var);
        }

        if (true_channel) out.nmse.push_back(nmse(est.taps, *true_channel));
        if (!true_symbols.empty()) out.ber.push_back(ber(det.symbols, true_symbols));
        out.estimates.push_back(est);
        out.decisions.push_back(det.symbols);
    }
    return out;
}

Detection separate_subframe_detect(const DDSignal& y_pilot, const DDSignal& y_data, const FramePlan& plan,
                                   ChannelEstimate* estimate_out) {
    const double MN = y_data.grid().size();
    ChannelEstimate est = estimate_channel(y_pilot, plan.pilot, plan.pilot_energy, plan.region, plan.tap_threshold);
    const DDSignal residual = cancel_pilot(y_pilot, est.taps, pilot_signal(plan.pilot), plan.pilot_energy);
    const double v = residual.energy() / MN;
    const double var = plan.noise_variance + static_cast<double>(est.taps.size()) * v / plan.pilot_energy;
    Detection det = lmmse_detect(y_data, est.taps, var);
    if (estimate_out) *estimate_out = std::move(est);
    return det;
}

}  // namespace zakotfs
