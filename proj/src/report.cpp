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

#include "rbsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rbsim {

namespace {

using nlohmann::json;

std::string subset_key(const std::vector<int>& qubits) {
    std::string s;
    for (size_t i = 0; i < qubits.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(qubits[i]);
    }
    return s;
}

std::vector<int> parse_subset_key(const std::string& key) {
    std::vector<int> q;
    std::istringstream is(key);
    std::string tok;
    while (std::getline(is, tok, ';')) q.push_back(std::stoi(tok));
    return q;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

/// Average 1Q-Clifford table length (gate count including identity pulses).
double gates_per_1q_clifford() { return average_1q_table_gates(); }

}  // namespace

std::string curves_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream os;
    os << "partition,subset,m,seed,survival\n";
    for (const auto& rec : records) {
        for (const auto& sub : rec.result.subsets) {
            const std::string key = subset_key(sub.qubits);
            for (size_t li = 0; li < sub.curve.lengths.size(); ++li)
                for (size_t si = 0; si < sub.curve.survival[li].size(); ++si)
                    os << '"' << rec.label << "\"," << key << ','
                       << sub.curve.lengths[li]
                       << ',' << si << ',' << fmt(sub.curve.survival[li][si])
                       << '\n';
        }
    }
    return os.str();
}

std::string plot_csv(const ExperimentRecord& record, int subset_index) {
    const auto& sub = record.result.subsets.at(static_cast<size_t>(subset_index));
    std::ostringstream os;
    os << "m,mean,stderr\n";
    for (size_t li = 0; li < sub.curve.lengths.size(); ++li)
        os << sub.curve.lengths[li] << ',' << fmt(sub.curve.mean[li]) << ','
           << fmt(sub.curve.stderr_[li]) << '\n';
    return os.str();
}

std::string summary_json_text(const std::vector<ExperimentRecord>& records,
                              const DeviceModel& device, const NoiseModel& noise,
                              uint64_t master_seed) {
    json j;
    j["schema"] = 1;
    j["master_seed"] = master_seed;
    j["device"] = json::parse(device.to_json_text());
    j["noise"] = json::parse(noise.to_json_text());
    j["experiments"] = json::array();
    for (const auto& rec : records) {
        json e;
        e["label"] = rec.label;
        e["observable"] =
            rec.spec.observable == ObservableMode::Joint ? "joint" : "marginal";
        e["lengths"] = rec.spec.lengths;
        e["seeds"] = rec.spec.seeds;
        e["ratio_1q_per_2q"] = rec.spec.ratio_1q_per_2q;
        e["subsets"] = json::array();
        for (const auto& sub : rec.result.subsets) {
            json s;
            s["qubits"] = sub.qubits;
            s["fit"] = {{"a", sub.fit.a},          {"alpha", sub.fit.alpha},
                        {"b", sub.fit.b},          {"a_err", sub.fit.a_err},
                        {"alpha_err", sub.fit.alpha_err},
                        {"b_err", sub.fit.b_err},  {"residual", sub.fit.residual},
                        {"degenerate", sub.fit.degenerate}};
            s["epc"] = sub.epc;
            s["epc_err"] = sub.epc_err;
            s["mean"] = sub.curve.mean;
            s["stderr"] = sub.curve.stderr_;
            e["subsets"].push_back(s);
        }
        j["experiments"].push_back(e);
    }
    return j.dump(2) + "\n";
}

Summary parse_summary(const std::string& json_text) {
    json j = json::parse(json_text);
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw std::invalid_argument("summary: unsupported schema");
    Summary s;
    s.master_seed = j.at("master_seed").get<uint64_t>();
    for (const auto& e : j.at("experiments")) {
        for (const auto& sub : e.at("subsets")) {
            SummaryFit f;
            f.label = e.at("label").get<std::string>();
            f.observable = e.at("observable").get<std::string>();
            f.qubits = sub.at("qubits").get<std::vector<int>>();
            const auto& fit = sub.at("fit");
            f.a = fit.at("a").get<double>();
            f.alpha = fit.at("alpha").get<double>();
            f.b = fit.at("b").get<double>();
            f.a_err = fit.at("a_err").get<double>();
            f.alpha_err = fit.at("alpha_err").get<double>();
            f.b_err = fit.at("b_err").get<double>();
            f.degenerate = fit.at("degenerate").get<bool>();
            f.epc = sub.at("epc").get<double>();
            f.epc_err = sub.at("epc_err").get<double>();
            s.fits.push_back(std::move(f));
        }
    }
    return s;
}

std::vector<CsvCurve> parse_curves_csv(const std::string& csv_text) {
    std::istringstream is(csv_text);
    std::string line;
    if (!std::getline(is, line) || line != "partition,subset,m,seed,survival")
        throw std::invalid_argument("curves csv: bad header");
    // (label, subset) -> m -> values
    std::map<std::pair<std::string, std::string>, std::map<int, std::vector<double>>>
        grouped;
    std::vector<std::pair<std::string, std::string>> order;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::string label;
        size_t pos = 0;
        if (!line.empty() && line[0] == '"') {
            const size_t close = line.find('"', 1);
            if (close == std::string::npos || close + 1 >= line.size() ||
                line[close + 1] != ',')
                throw std::invalid_argument("curves csv: bad quoted label");
            label = line.substr(1, close - 1);
            pos = close + 2;
        } else {
            const size_t comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("curves csv: bad row");
            label = line.substr(0, comma);
            pos = comma + 1;
        }
        std::istringstream ls(line.substr(pos));
        std::string subset, m_s, seed_s, surv_s;
        if (!std::getline(ls, subset, ',') || !std::getline(ls, m_s, ',') ||
            !std::getline(ls, seed_s, ',') || !std::getline(ls, surv_s))
            throw std::invalid_argument("curves csv: bad row");
        auto key = std::make_pair(label, subset);
        if (grouped.find(key) == grouped.end()) order.push_back(key);
        grouped[key][std::stoi(m_s)].push_back(std::stod(surv_s));
    }
    std::vector<CsvCurve> out;
    for (const auto& key : order) {
        CsvCurve c;
        c.label = key.first;
        c.qubits = parse_subset_key(key.second);
        for (const auto& [m, vals] : grouped[key]) {
            double mean = 0;
            for (double v : vals) mean += v;
            mean /= vals.size();
            double var = 0;
            for (double v : vals) var += (v - mean) * (v - mean);
            double se = vals.size() > 1
                            ? std::sqrt(var / (vals.size() - 1.0) / vals.size())
                            : 0.0;
            c.points.push_back({static_cast<double>(m), mean, se});
        }
        out.push_back(std::move(c));
    }
    return out;
}

SynthStats synth_stats(int n, const ConnectivityGraph& conn, int samples,
                       uint64_t seed, const GateDurations& dur) {
    if (samples < 1) throw std::invalid_argument("synth_stats: samples < 1");
    if (n < 1 || n > 3) throw std::invalid_argument("synth_stats: n must be 1..3");
    RandomStream rng(seed);
    SynthStats st;
    st.n = n;
    st.samples = samples;
    double s_cnot = 0, s2_cnot = 0, s_1q = 0, s2_1q = 0, s_wi = 0, s2_wi = 0;
    double s_vz = 0, s_dur = 0;
    int verified = 0;
    for (int i = 0; i < samples; ++i) {
        CliffordTableau c = sample_uniform(n, rng);
        PrimitiveCircuit circ;
        if (n == 1) {
            circ = decompose_1q(c, Gateset1Q::PulsesOnly);
        } else if (n == 2) {
            circ = route(decompose_2q(c, Gateset1Q::PulsesOnly), conn,
                         Gateset1Q::PulsesOnly);
        } else {
            circ = decompose_3q(c, conn, Gateset1Q::PulsesAndVz);
        }
        if (verify(circ, c)) ++verified;
        PrimitiveCircuit sched = schedule(circ, dur);
        GateCounts g = count_gates(sched, dur);
        s_cnot += g.n_cnot;
        s2_cnot += g.n_cnot * g.n_cnot;
        s_1q += g.n_1q;
        s2_1q += g.n_1q * g.n_1q;
        const double wi = g.n_1q_with_idles();
        s_wi += wi;
        s2_wi += wi * wi;
        s_vz += g.n_vz;
        s_dur += sched.total_duration;
    }
    auto mean_se = [&](double s1, double s2, double& mean, double& se) {
        mean = s1 / samples;
        double var = samples > 1 ? (s2 - samples * mean * mean) / (samples - 1.0)
                                 : 0.0;
        se = std::sqrt(std::max(0.0, var) / samples);
    };
    mean_se(s_cnot, s2_cnot, st.avg_cnot, st.se_cnot);
    mean_se(s_1q, s2_1q, st.avg_1q, st.se_1q);
    mean_se(s_wi, s2_wi, st.avg_1q_with_idles, st.se_1q_with_idles);
    st.avg_vz = s_vz / samples;
    st.avg_duration = s_dur / samples;
    st.verify_rate = static_cast<double>(verified) / samples;
    return st;
}

ConnectivityGraph pair_connectivity(const DeviceModel& device, int a, int b) {
    ConnectivityGraph g;
    if (device.connectivity.has_directed(a, b)) g.edges.insert({0, 1});
    if (device.connectivity.has_directed(b, a)) g.edges.insert({1, 0});
    if (g.edges.empty())
        throw std::invalid_argument("pair_connectivity: qubits not coupled");
    return g;
}

std::string synth_stats_text(const SynthStats& s) {
    std::ostringstream os;
    os.precision(6);
    os << "n=" << s.n << " samples=" << s.samples << '\n'
       << "  avg CNOT:          " << s.avg_cnot << " +- " << s.se_cnot << '\n'
       << "  avg 1Q pulses:     " << s.avg_1q << " +- " << s.se_1q << '\n'
       << "  avg 1Q with idles: " << s.avg_1q_with_idles << " +- "
       << s.se_1q_with_idles << '\n'
       << "  avg VZ:            " << s.avg_vz << '\n'
       << "  avg duration [s]:  " << s.avg_duration << '\n'
       << "  verify pass rate:  " << s.verify_rate << '\n';
    return os.str();
}

std::string table1_text(const Summary& summary) {
    std::ostringstream os;
    os << "experiment            subset   alpha        EPC          EPG(1Q)\n";
    for (const auto& f : summary.fits) {
        std::ostringstream lab;
        lab << f.label;
        std::string l = lab.str();
        l.resize(22, ' ');
        std::string sk = subset_key(f.qubits);
        sk.resize(9, ' ');
        os << l << sk;
        os.precision(6);
        os << f.alpha << "  " << f.epc;
        if (f.qubits.size() == 1)
            os << "  " << epg_from_epc(f.epc, gates_per_1q_clifford());
        os << '\n';
    }
    return os.str();
}

std::string PredictionReport::text() const {
    std::ostringstream os;
    os.precision(6);
    os << "prediction inputs: alpha_1q(per pulse)=" << alpha_1q
       << " alpha_2q(per CNOT)=" << alpha_2q << " N1=" << n1 << " N2=" << n2
       << '\n';
    os << "predicted 3Q: alpha=" << prediction.alpha << " EPC=" << prediction.epc
       << '\n';
    os << "coherence-limit 3Q EPC: " << coherence_epc << '\n';
    if (measured_3q_epc) {
        os << "measured 3Q EPC: " << *measured_3q_epc;
        if (measured_3q_err) os << " +- " << *measured_3q_err;
        os << "  (predicted/measured ratio "
           << (*measured_3q_epc != 0 ? prediction.epc / *measured_3q_epc : 0.0)
           << ")\n";
    }
    return os.str();
}

PredictionReport build_prediction(const Summary& summary,
                                  const SynthStats& stats2q,
                                  const SynthStats& stats3q,
                                  const DeviceModel& device) {
    // per-primitive 1Q alpha per qubit, from the best available 1Q fit
    std::map<int, double> alpha1_primitive;
    for (const auto& f : summary.fits) {
        if (f.qubits.size() != 1) continue;
        const double a_cliff = alpha_from_epc(1, f.epc);
        if (a_cliff <= 0) continue;
        alpha1_primitive[f.qubits[0]] =
            std::pow(a_cliff, 1.0 / gates_per_1q_clifford());
    }
    if (alpha1_primitive.empty())
        throw std::invalid_argument("build_prediction: summary has no 1Q fits");

    // per-CNOT alpha per benchmarked pair
    std::vector<double> alpha_cnots;
    for (const auto& f : summary.fits) {
        if (f.qubits.size() != 2) continue;
        const int qa = f.qubits[0], qb = f.qubits[1];
        auto epg1 = [&](int q) {
            auto it = alpha1_primitive.find(q);
            if (it == alpha1_primitive.end())
                throw std::invalid_argument(
                    "build_prediction: missing 1Q fit for qubit " +
                    std::to_string(q));
            return epc_from_alpha(1, it->second);
        };
        // count pulses only: idles carry no per-gate error, and the
        // duration-dependent part is reported via the coherence limit
        const double n1_per_qubit = stats2q.avg_1q / 2.0;
        const double cnot_epg =
            extract_2q_epg(f.epc, epg1(qa), epg1(qb), n1_per_qubit, n1_per_qubit,
                           stats2q.avg_cnot);
        alpha_cnots.push_back(alpha_from_epc(2, cnot_epg));
    }
    if (alpha_cnots.empty())
        throw std::invalid_argument("build_prediction: summary has no 2Q fits");

    PredictionReport rep;
    double s1 = 0;
    for (const auto& [q, a] : alpha1_primitive) s1 += a;
    rep.alpha_1q = s1 / alpha1_primitive.size();
    double s2 = 0;
    for (double a : alpha_cnots) s2 += a;
    rep.alpha_2q = s2 / alpha_cnots.size();
    rep.n1 = stats3q.avg_1q;
    rep.n2 = stats3q.avg_cnot;
    rep.prediction = predict_alpha_3q(
        {rep.alpha_1q, rep.alpha_2q, rep.n1, rep.n2});
    rep.coherence_epc = coherence_limit_3q_epc(device, stats3q.avg_duration);
    for (const auto& f : summary.fits) {
        if (f.qubits.size() == 3) {
            rep.measured_3q_epc = f.epc;
            rep.measured_3q_err = f.epc_err;
            break;
        }
    }
    return rep;
}

}  // namespace rbsim
