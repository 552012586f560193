#pragma once

// Helpers shared by the unit tests and the acceptance runner: scratch
// directories, file I/O, and brute-force reference implementations that the
// library results are compared against.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rguard/nlp/label.hpp"
#include "rguard/nlp/tfidf.hpp"
#include "rguard/random.hpp"

namespace rguard::testing {

namespace fs = std::filesystem;

class TempDir {
public:
    explicit TempDir(const std::string& tag = "rguard") {
        std::string templ = (fs::temp_directory_path() / (tag + "-XXXXXX")).string();
        if (::mkdtemp(templ.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
        path_ = templ;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    fs::path path_;
};

inline void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
}

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Runs a shell command and returns its stdout.
inline std::string capture(const std::string& cmd) {
    std::string out;
    FILE* f = ::popen(cmd.c_str(), "r");
    if (f == nullptr) throw std::runtime_error("popen failed: " + cmd);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    ::pclose(f);
    return out;
}

// ---------------------------------------------------------------------------
// Reference chi-squared: dense matrix, textbook sum over classes of
// (observed - expected)^2 / expected, expected = total mass * class share.

inline std::vector<double> oracle_chi2(const std::vector<std::vector<double>>& X,
                                       const std::vector<nlp::Label>& y) {
    const std::size_t n_features = X.empty() ? 0 : X[0].size();
    double n_ransom = 0, n_benign = 0;
    for (auto l : y) (l == nlp::Label::Ransom ? n_ransom : n_benign) += 1;
    const double n = n_ransom + n_benign;
    std::vector<double> out(n_features, 0.0);
    for (std::size_t f = 0; f < n_features; ++f) {
        double o_ransom = 0, o_benign = 0;
        for (std::size_t d = 0; d < X.size(); ++d) (y[d] == nlp::Label::Ransom ? o_ransom : o_benign) += X[d][f];
        const double total = o_ransom + o_benign;
        const double e_ransom = total * n_ransom / n;
        const double e_benign = total * n_benign / n;
        double s = 0;
        if (e_ransom > 0) s += (o_ransom - e_ransom) * (o_ransom - e_ransom) / e_ransom;
        if (e_benign > 0) s += (o_benign - e_benign) * (o_benign - e_benign) / e_benign;
        out[f] = s;
    }
    return out;
}

/// Feature j is kept iff fewer than k features outrank it, where i outranks j
/// when its score is higher, or equal with a lower index.
inline std::vector<std::uint32_t> oracle_select(const std::vector<double>& scores, std::size_t k) {
    std::vector<std::uint32_t> keep;
    for (std::size_t j = 0; j < scores.size(); ++j) {
        std::size_t outranked_by = 0;
        for (std::size_t i = 0; i < scores.size(); ++i)
            if (scores[i] > scores[j] || (scores[i] == scores[j] && i < j)) ++outranked_by;
        if (outranked_by < k) keep.push_back(static_cast<std::uint32_t>(j));
    }
    return keep;
}

// ---------------------------------------------------------------------------
// Reference multinomial NB evaluated in probability space (products, not
// log sums), fine for the small instances it is used on.

struct OracleNb {
    std::array<double, 2> prior{};
    std::array<std::vector<double>, 2> theta;
};

inline OracleNb oracle_fit_nb(const std::vector<std::vector<double>>& X, const std::vector<nlp::Label>& y,
                              double alpha) {
    const std::size_t F = X[0].size();
    OracleNb m;
    for (int c = 0; c < 2; ++c) {
        double docs = 0, class_mass = 0;
        std::vector<double> mass(F, 0.0);
        for (std::size_t d = 0; d < X.size(); ++d) {
            if (static_cast<int>(y[d]) != c) continue;
            docs += 1;
            for (std::size_t f = 0; f < F; ++f) mass[f] += X[d][f];
        }
        for (double v : mass) class_mass += v;
        m.prior[c] = docs / static_cast<double>(X.size());
        for (std::size_t f = 0; f < F; ++f) m.theta[c].push_back((mass[f] + alpha) / (class_mass + alpha * F));
    }
    return m;
}

/// Posterior P(class | x), normalized over both classes.
inline std::array<double, 2> oracle_posterior(const OracleNb& m, const std::vector<double>& x) {
    std::array<double, 2> joint{};
    for (int c = 0; c < 2; ++c) {
        double p = m.prior[c];
        for (std::size_t f = 0; f < x.size(); ++f) p *= std::pow(m.theta[c][f], x[f]);
        joint[c] = p;
    }
    const double z = joint[0] + joint[1];
    return {joint[0] / z, joint[1] / z};
}

inline std::vector<double> densify(const nlp::SparseVector& v, std::size_t n) {
    std::vector<double> out(n, 0.0);
    for (const auto& [i, w] : v.entries) out[i] = w;
    return out;
}

inline nlp::SparseVector sparsify(const std::vector<double>& dense) {
    nlp::SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] > 0) v.entries.emplace_back(static_cast<nlp::FeatureIndex>(i), dense[i]);
    return v;
}

/// Random labelled matrix with both classes present: 2..max_docs rows,
/// 1..max_features nonnegative columns, about half the cells zero.
struct RandomInstance {
    std::vector<std::vector<double>> X;
    std::vector<nlp::Label> y;
};

inline RandomInstance random_instance(DeterministicRng& rng, std::size_t max_docs, std::size_t max_features) {
    RandomInstance inst;
    const auto docs = static_cast<std::size_t>(rng.between(2, max_docs));
    const auto features = static_cast<std::size_t>(rng.between(1, max_features));
    for (std::size_t d = 0; d < docs; ++d) {
        std::vector<double> row(features, 0.0);
        for (auto& v : row)
            if (rng.below(2) == 0) v = rng.unit() * 3.0;
        inst.X.push_back(std::move(row));
        inst.y.push_back(rng.below(2) == 0 ? nlp::Label::Benign : nlp::Label::Ransom);
    }
    inst.y[0] = nlp::Label::Benign;
    inst.y[1] = nlp::Label::Ransom;
    return inst;
}

}  // namespace rguard::testing
