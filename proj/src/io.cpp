#include "bsq/io.hpp"

#include <fstream>
#include <iomanip>

#include <nlohmann/json.hpp>

namespace bsq {
namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file for reading: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open file for writing: " + path);
    out << std::setprecision(17);
    return out;
}

std::vector<double> array_of(const json& j, const char* key, std::size_t n) {
    if (!j.contains(key) || !j[key].is_array())
        throw UsageError(std::string("coefficient file: missing array '") + key + "'");
    std::vector<double> v = j[key].get<std::vector<double>>();
    if (v.size() != n)
        throw UsageError(std::string("coefficient file: array '") + key +
                         "' has wrong length");
    return v;
}

} // namespace

CoefficientPair read_coefficients(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw UsageError("coefficient file: missing integer 'N'");
    auto n = j["N"].get<long long>();
    if (n < 0) throw UsageError("coefficient file: N must be >= 0");
    auto N = static_cast<std::size_t>(n);
    return {TrigSeries(array_of(j, "p_cos", N), array_of(j, "p_sin", N)),
            TrigSeries(array_of(j, "q_cos", N), array_of(j, "q_sin", N))};
}

void write_coefficients(const std::string& path, const CoefficientPair& u) {
    int N = u.modes();
    auto pad = [N](const TrigSeries& f, bool sin_part) {
        std::vector<double> v(N, 0.0);
        for (int m = 1; m <= f.modes(); ++m)
            v[m - 1] = sin_part ? f.sin_coeff(m) : f.cos_coeff(m);
        return v;
    };
    json j{{"N", N},
           {"p_cos", pad(u.p, false)},
           {"p_sin", pad(u.p, true)},
           {"q_cos", pad(u.q, false)},
           {"q_sin", pad(u.q, true)}};
    open_out(path) << j.dump(2) << '\n';
}

SpectralData read_spectral_data(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw UsageError("spectral file: missing integer 'N'");
    int N = j["N"].get<int>();
    if (N < 1) throw UsageError("spectral file: N must be >= 1");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw UsageError("spectral file: missing 'entries' array");
    SpectralData d = SpectralData::zeros(N);
    std::vector<bool> seen(2 * N, false);
    for (const auto& e : j["entries"]) {
        if (!e.contains("n") || !e.contains("h_c") || !e.contains("h_s"))
            throw UsageError("spectral file: entry needs fields n, h_c, h_s");
        int n = e["n"].get<int>();
        if (n == 0 || std::abs(n) > N)
            throw UsageError("spectral file: entry index out of range");
        d.at(n).h_c = e["h_c"].get<double>();
        d.at(n).h_s = e["h_s"].get<double>();
        seen[(n < 0) ? n + N : N + n - 1] = true;
    }
    for (bool s : seen)
        if (!s) throw UsageError("spectral file: incomplete index set");
    return d;
}

void write_spectral_data(const std::string& path, const SpectralData& d) {
    json entries = json::array();
    for (const auto& e : d.entries)
        entries.push_back({{"n", e.n}, {"h_c", e.h_c}, {"h_s", e.h_s}});
    json j{{"N", d.N}, {"entries", entries}};
    open_out(path) << j.dump(2) << '\n';
}

void write_eigenvalue_csv(const std::string& path,
                          const std::vector<EigenvalueRecord>& records) {
    auto out = open_out(path);
    out << "n,mu,residual,newton_iters,disc_margin\n";
    for (const auto& r : records)
        out << r.n << ',' << r.mu << ',' << r.residual << ',' << r.newton_iters << ','
            << r.disc_margin << '\n';
}

void write_convergence_csv(const std::string& path, const InversionReport& report) {
    auto out = open_out(path);
    out << "iteration,residual\n";
    for (std::size_t k = 0; k < report.residual_history.size(); ++k)
        out << k << ',' << report.residual_history[k] << '\n';
}

void write_gradient_csv(const std::string& path, const GradientPair& g) {
    auto out = open_out(path);
    out << "t,d_p,d_q\n";
    for (std::size_t i = 0; i < g.grid.size(); ++i)
        out << g.grid[i] << ',' << g.d_p[i] << ',' << g.d_q[i] << '\n';
}

} // namespace bsq
