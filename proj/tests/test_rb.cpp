// Copyright 2026 The rbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "rbsim/rb.hpp"

using namespace rbsim;

TEST_CASE("partition parse/label roundtrip and validation") {
    for (const auto& p : standard_partitions()) {
        CHECK(RBPartition::parse(p.label()).label() == p.label());
        p.validate(3);
    }
    CHECK_THROWS(RBPartition::parse("{}"));
    CHECK_THROWS(RBPartition{{{0}, {0}}}.validate(3));  // overlap
    CHECK_THROWS(RBPartition{{{5}}}.validate(3));       // out of range
}

TEST_CASE("sequence generation: inverse closes every subset") {
    RBSpec spec;
    spec.partition = RBPartition::parse("{[0,1],[2]}");
    spec.lengths = {1, 2, 3};
    auto seqs = generate_sequences(spec, 2, 99);
    REQUIRE(seqs.size() == 2);
    CHECK(seqs[0].cliffords.size() == 3);       // 2 + inverse
    CHECK(seqs[1].cliffords.size() == 19);      // 9 * 2 + inverse
    for (const auto& seq : seqs) {
        const int ns = static_cast<int>(seq.qubits.size());
        CliffordTableau acc = identity_tableau(ns);
        for (const auto& c : seq.cliffords) acc = compose(acc, c);
        CHECK(acc == identity_tableau(ns));
    }
    // determinism
    auto again = generate_sequences(spec, 2, 99);
    for (size_t i = 0; i < seqs.size(); ++i)
        for (size_t k = 0; k < seqs[i].cliffords.size(); ++k)
            CHECK(seqs[i].cliffords[k] == again[i].cliffords[k]);
}

TEST_CASE("ratio applies only when a 2Q subset is present") {
    RBSpec spec;
    spec.partition = RBPartition::parse("{[0],[1],[2]}");
    spec.lengths = {1, 2, 3};
    auto seqs = generate_sequences(spec, 4, 1);
    for (const auto& seq : seqs) CHECK(seq.cliffords.size() == 5);
}

TEST_CASE("noiseless RB survival is exactly 1 for every partition") {
    DeviceModel dev = DeviceModel::reference_device(Calibration::A);
    NoiseModel noise;
    for (const auto& p : standard_partitions()) {
        RBSpec spec;
        spec.partition = p;
        spec.lengths = {1, 2, 3};
        auto seqs = generate_sequences(spec, 3, 5);
        auto surv = simulate_rb_round(seqs, dev, noise, ObservableMode::Joint);
        for (double s : surv) CHECK(std::abs(s - 1.0) < 1e-9);
        auto survm = simulate_rb_round(seqs, dev, noise, ObservableMode::Marginal);
        for (double s : survm) CHECK(std::abs(s - 1.0) < 1e-9);
    }
}

TEST_CASE("Eq.(1) conversions") {
    CHECK(epc_from_alpha(1, 1.0) == 0.0);
    CHECK(epc_from_alpha(3, 0.0) == doctest::Approx(7.0 / 8.0));
    CHECK(alpha_from_epc(3, 0.106) == doctest::Approx(1.0 - 0.106 * 8.0 / 7.0));
    for (double a : {0.3, 0.77, 0.998})
        for (int n : {1, 2, 3})
            CHECK(alpha_from_epc(n, epc_from_alpha(n, a)) ==
                  doctest::Approx(a).epsilon(1e-15));
    // monotonicity
    CHECK(epc_from_alpha(2, 0.9) > epc_from_alpha(2, 0.95));
}

TEST_CASE("EPG conversions") {
    CHECK(epg_from_epc(0.0, 2.2083) == 0.0);
    CHECK(epg_from_epc(0.02, 2.0) == doctest::Approx(0.01));
    // compounding cross-check: recompose the EPG and recover EPC within 1%
    for (double epc : {0.005, 0.02, 0.05}) {
        const double gates = 53.0 / 24.0;
        double epg = epg_from_epc_compounded(1, epc, gates);
        double alpha_g = alpha_from_epc(1, epg);
        double epc_back = epc_from_alpha(1, std::pow(alpha_g, gates));
        CHECK(epc_back == doctest::Approx(epc).epsilon(1e-10));
        // small-error approximation agrees within 1% at these scales
        CHECK(epg_from_epc(epc, gates) == doctest::Approx(epg).epsilon(0.02));
    }
}

TEST_CASE("predict_alpha_3q reference point and trivial cases") {
    CHECK(predict_alpha_3q({1.0, 1.0, 30.0, 3.0}).alpha == doctest::Approx(1.0));
    CHECK(predict_alpha_3q({1.0, 1.0, 30.0, 3.0}).epc == doctest::Approx(0.0));
    Prediction p = predict_alpha_3q({0.998, 0.97, 34.7, 3.5});
    CHECK(p.alpha == doctest::Approx(0.8572).epsilon(2e-4));
    CHECK(p.epc == doctest::Approx(0.125).epsilon(2e-3));
}

TEST_CASE("general sector average reduces to the homogeneous formula") {
    for (double a1 : {0.9, 0.99, 1.0}) {
        for (double a2 : {0.9, 0.95, 1.0}) {
            Prediction hom = predict_alpha_3q({a1, a2, 34.7, 3.5});
            Prediction gen = predict_alpha_3q_general(
                {a1, a1, a1}, {34.7 / 3, 34.7 / 3, 34.7 / 3}, {a2, a2, a2},
                {3.5 / 3, 3.5 / 3, 3.5 / 3});
            CHECK(gen.alpha == doctest::Approx(hom.alpha).epsilon(1e-12));
        }
    }
}

TEST_CASE("extract_2q_epg closed loop and edge cases") {
    // inject a known CNOT depolarizing parameter and recover it
    for (double ac : {0.9, 0.96, 0.999}) {
        const double a1 = 0.998, n1 = 4.5, nc = 1.5;
        const double A = std::pow(a1, n1), B = std::pow(a1, n1);
        const double alpha2 = std::pow(ac, nc) * (3 * A + 3 * B + 9 * A * B) / 15.0;
        double epg = extract_2q_epg(epc_from_alpha(2, alpha2),
                                    epc_from_alpha(1, a1), epc_from_alpha(1, a1),
                                    n1, n1, nc);
        CHECK(epg == doctest::Approx(epc_from_alpha(2, ac)).epsilon(1e-9));
    }
    // zero noise
    CHECK(extract_2q_epg(0.0, 0.0, 0.0, 4.5, 4.5) == doctest::Approx(0.0));
    // 1Q errors already exceeding the 2Q EPC: no solution
    CHECK_THROWS(extract_2q_epg(0.001, 0.05, 0.05, 4.5, 4.5));
}

TEST_CASE("coherence_limit_3q_epc basics") {
    DeviceModel dev = DeviceModel::reference_device(Calibration::A);
    // infinite coherence
    DeviceModel frozen = dev;
    frozen.t1 = {1e18, 1e18, 1e18};
    frozen.t2 = {1e18, 1e18, 1e18};
    CHECK(coherence_limit_3q_epc(frozen, 1e-6) == doctest::Approx(0.0).epsilon(1e-9));
    // doubling T1,T2 roughly halves the limit at small error
    DeviceModel doubled = dev;
    for (int q = 0; q < 3; ++q) {
        doubled.t1[q] *= 2;
        doubled.t2[q] *= 2;
    }
    double base = coherence_limit_3q_epc(dev, 1e-6);
    double half = coherence_limit_3q_epc(doubled, 1e-6);
    CHECK(half == doctest::Approx(base / 2).epsilon(0.05));
}

TEST_CASE("global depolarizing recovers alpha = 1 - p (3Q, quick)") {
    DeviceModel dev = DeviceModel::reference_device(Calibration::A);
    NoiseModel noise;
    noise.depol_per_clifford = 0.03;
    RBSpec spec;
    spec.partition = RBPartition::parse("{[0,1,2]}");
    spec.lengths = {1, 2, 4, 6};
    spec.seeds = 3;
    RBResult r = run_experiment(spec, dev, noise, 17, 2);
    CHECK(r.subsets[0].fit.alpha == doctest::Approx(0.97).epsilon(1e-7));
    CHECK(r.subsets[0].epc ==
          doctest::Approx(epc_from_alpha(3, 0.97)).epsilon(1e-6));
}

TEST_CASE("thread count does not change results") {
    DeviceModel dev = DeviceModel::reference_device(Calibration::A);
    NoiseModel noise;
    noise.depol_1q = 2e-3;
    RBSpec spec;
    spec.partition = RBPartition::parse("{[1]}");
    spec.lengths = {1, 10, 25, 50};
    spec.seeds = 4;
    RBResult r1 = run_experiment(spec, dev, noise, 123, 1);
    RBResult r4 = run_experiment(spec, dev, noise, 123, 4);
    CHECK(r1.subsets[0].fit.alpha == r4.subsets[0].fit.alpha);
    for (size_t li = 0; li < spec.lengths.size(); ++li)
        for (int si = 0; si < spec.seeds; ++si)
            CHECK(r1.subsets[0].curve.survival[li][si] ==
                  r4.subsets[0].curve.survival[li][si]);
}

TEST_CASE("simultaneous 2Q RB with crosstalk is no better than isolated") {
    DeviceModel dev = DeviceModel::reference_device(Calibration::B);
    NoiseModel noise;
    noise.enable_damping = true;
    noise.enable_zz = true;
    RBSpec iso;
    iso.partition = RBPartition::parse("{[0,1]}");
    iso.lengths = {1, 5, 10, 20, 35};
    iso.seeds = 6;
    RBSpec sim = iso;
    sim.partition = RBPartition::parse("{[0,1],[2]}");
    RBResult r_iso = run_experiment(iso, dev, noise, 31, 4);
    RBResult r_sim = run_experiment(sim, dev, noise, 31, 4);
    CHECK(r_sim.subsets[0].epc >= r_iso.subsets[0].epc * 0.98);
}

TEST_CASE("bootstrap option yields a nonzero uncertainty") {
    DeviceModel dev = DeviceModel::reference_device(Calibration::A);
    NoiseModel noise;
    noise.depol_1q = 2e-3;
    RBSpec spec;
    spec.partition = RBPartition::parse("{[0]}");
    spec.lengths = {1, 10, 25, 50};
    spec.seeds = 5;
    spec.bootstrap = true;
    spec.bootstrap_resamples = 50;
    RBResult r = run_experiment(spec, dev, noise, 77, 2);
    CHECK(r.subsets[0].fit.alpha_err > 0.0);
}

TEST_CASE("compare_prediction ratio") {
    auto c = compare_prediction("x", 0.106, 0.002, 0.115, 0.004);
    CHECK(c.ratio == doctest::Approx(0.115 / 0.106));
    CHECK(compare_prediction("x", 0.2, 0, 0.2, 0).ratio == doctest::Approx(1.0));
}
