#include "vanet/miner/fcm.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "vanet/sim/rng.hpp"

namespace vanet::miner {

namespace {

double sq_dist(const Row& a, const Row& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d += (a[j] - b[j]) * (a[j] - b[j]);
    return d;
}

double objective(const std::vector<Row>& x, const std::vector<Row>& v, const std::vector<double>& u, double m) {
    const std::size_t k = v.size();
    double j = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t c = 0; c < k; ++c) j += std::pow(u[i * k + c], m) * sq_dist(x[i], v[c]);
    }
    return j;
}

// Returns the number of rows that coincided with at least one center.
std::size_t update_memberships(const std::vector<Row>& x, const std::vector<Row>& v, double m,
                               std::vector<double>& u) {
    const std::size_t k = v.size();
    const double exponent = 1.0 / (m - 1.0);  // applied to squared distances: (d^2)^(1/(m-1)) = d^(2/(m-1))
    std::vector<double> d2(k);
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t zeros = 0;
        for (std::size_t c = 0; c < k; ++c) {
            d2[c] = sq_dist(x[i], v[c]);
            zeros += d2[c] == 0.0;
        }
        double* row = &u[i * k];
        if (zeros > 0) {
            ++degenerate;
            for (std::size_t c = 0; c < k; ++c) row[c] = d2[c] == 0.0 ? 1.0 / static_cast<double>(zeros) : 0.0;
            continue;
        }
        for (std::size_t c = 0; c < k; ++c) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += std::pow(d2[c] / d2[l], exponent);
            row[c] = 1.0 / s;
        }
    }
    return degenerate;
}

double update_centers(const std::vector<Row>& x, const std::vector<double>& u, double m, std::vector<Row>& v) {
    const std::size_t k = v.size();
    double moved = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        Row num{};
        double den = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double w = std::pow(u[i * k + c], m);
            for (std::size_t j = 0; j < num.size(); ++j) num[j] += w * x[i][j];
            den += w;
        }
        if (den == 0.0) continue;  // cluster lost every row; keep its center
        Row next;
        for (std::size_t j = 0; j < num.size(); ++j) next[j] = num[j] / den;
        moved = std::max(moved, std::sqrt(sq_dist(next, v[c])));
        v[c] = next;
    }
    return moved;
}

}  // namespace

Dataset parse_dataset(const std::string& text) {
    Dataset data;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (header) {
            header = false;
            continue;
        }
        Row row{};
        std::istringstream fields(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(fields, cell, ',')) {
            if (col == row.size()) throw MinerError("line " + std::to_string(line_no) + ": more than 4 columns");
            std::size_t used = 0;
            try {
                row[col] = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || cell.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(row[col])) {
                throw MinerError("line " + std::to_string(line_no) + ": bad number '" + cell + "'");
            }
            ++col;
        }
        if (col != row.size()) throw MinerError("line " + std::to_string(line_no) + ": expected 4 columns");
        data.rows.push_back(row);
    }
    return data;
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MinerError("cannot open dataset '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_dataset(buf.str());
    } catch (const MinerError& e) {
        throw MinerError(path.string() + ": " + e.what());
    }
}

FcmResult fcm_cluster(const Dataset& data, const FcmParams& params) {
    return fcm_cluster(data, params, {});
}

FcmResult fcm_cluster(const Dataset& data, const FcmParams& p, const FcmObserver& observer) {
    const auto& x = data.rows;
    if (x.empty()) throw MinerError("empty dataset");
    if (p.clusters < 1) throw MinerError("cluster count must be at least 1");
    if (p.clusters > x.size()) throw MinerError("more clusters than rows");
    if (!(p.fuzzifier > 1.0)) throw MinerError("fuzzifier m must exceed 1");
    if (!(p.tolerance > 0.0)) throw MinerError("tolerance must be positive");

    const std::size_t k = p.clusters;
    FcmResult r;

    // partial Fisher-Yates: the first k slots are a uniform sample without replacement
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    sim::RandomStream rng(p.seed);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t pick = c + static_cast<std::size_t>(rng.uniform_int(0, x.size() - 1 - c));
        std::swap(order[c], order[pick]);
        r.centers.push_back(x[order[c]]);
    }

    r.memberships.assign(x.size() * k, 0.0);
    for (std::size_t it = 0; it < std::max<std::size_t>(p.max_iterations, 1); ++it) {
        r.degenerate_assignments = update_memberships(x, r.centers, p.fuzzifier, r.memberships);
        r.objective_history.push_back(objective(x, r.centers, r.memberships, p.fuzzifier));
        if (observer) observer(it, r.memberships, r.objective_history.back());
        const double moved = update_centers(x, r.memberships, p.fuzzifier, r.centers);
        r.iterations = it + 1;
        if (moved < p.tolerance) break;
    }
    r.degenerate_assignments = update_memberships(x, r.centers, p.fuzzifier, r.memberships);
    r.objective = objective(x, r.centers, r.memberships, p.fuzzifier);
    r.objective_history.push_back(r.objective);
    return r;
}

}  // namespace vanet::miner
