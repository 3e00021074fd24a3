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

#include "doctest.h"
#include "rbsim/device.hpp"

using namespace rbsim;

TEST_CASE("reference device validates and differs by calibration") {
    DeviceModel a = DeviceModel::reference_device(Calibration::A);
    DeviceModel b = DeviceModel::reference_device(Calibration::B);
    a.validate();
    b.validate();
    CHECK(a.n == 3);
    CHECK(a.calibration == Calibration::A);
    CHECK(b.calibration == Calibration::B);
    // B leaves ZZ uncompensated: zero frame offsets
    for (int q = 0; q < 3; ++q) CHECK(b.frame_offset(q) == 0.0);
    // A absorbs half the summed ZZ of each neighbor pair
    for (int q = 0; q < 3; ++q) {
        double expect = 0;
        for (int j = 0; j < 3; ++j) expect += a.zz[q][j] / 2.0;
        CHECK(a.frame_offset(q) == doctest::Approx(expect));
    }
}

TEST_CASE("device JSON roundtrip") {
    DeviceModel a = DeviceModel::reference_device(Calibration::B);
    DeviceModel back = DeviceModel::from_json_text(a.to_json_text());
    CHECK(back.n == a.n);
    CHECK(back.t1 == a.t1);
    CHECK(back.t2 == a.t2);
    CHECK(back.zz == a.zz);
    CHECK(back.calibration == a.calibration);
    CHECK(back.connectivity.edges == a.connectivity.edges);
    CHECK(back.durations.oneq == a.durations.oneq);
    CHECK(back.durations.cnot == a.durations.cnot);
}

TEST_CASE("device validation rejects bad inputs") {
    DeviceModel d = DeviceModel::reference_device(Calibration::A);
    SUBCASE("t2 > 2 t1") {
        d.t2[0] = 3 * d.t1[0];
        CHECK_THROWS(d.validate());
    }
    SUBCASE("asymmetric zz") {
        d.zz[0][1] = 1.0;
        CHECK_THROWS(d.validate());
    }
    SUBCASE("nonzero zz diagonal") {
        d.zz[1][1] = 5.0;
        CHECK_THROWS(d.validate());
    }
    SUBCASE("negative t1") {
        d.t1[2] = -1.0;
        CHECK_THROWS(d.validate());
    }
}

TEST_CASE("noise model JSON roundtrip and validation") {
    NoiseModel m;
    m.depol_1q = 1e-3;
    m.depol_2q = 1e-2;
    m.enable_damping = true;
    m.enable_zz = true;
    m.depol_per_clifford = 0.05;
    NoiseModel back = NoiseModel::from_json_text(m.to_json_text());
    CHECK(back.depol_1q == m.depol_1q);
    CHECK(back.depol_2q == m.depol_2q);
    CHECK(back.enable_damping == m.enable_damping);
    CHECK(back.enable_zz == m.enable_zz);
    CHECK(back.depol_per_clifford == m.depol_per_clifford);
    CHECK(!m.noiseless());
    CHECK(NoiseModel{}.noiseless());
    NoiseModel bad;
    bad.depol_1q = 1.5;
    CHECK_THROWS(bad.validate());
}
