#include "cryptoeq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

namespace cryptoeq {

void GridSpec::validate() const {
    if (n_p < 2 || n_x < 2) {
        throw std::invalid_argument("GridSpec: need at least 2 grid points per axis");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("GridSpec: eps must be positive");
    }
}

double grid_best_x(const ModelParams& params, double p, int n_x) {
    if (n_x < 2) {
        throw std::invalid_argument("grid_best_x: need at least 2 grid points");
    }
    double best_x = 0.0;
    double best_u = utility_w(params, p, 0.0);
    for (int j = 1; j < n_x; ++j) {
        const double x = static_cast<double>(j) / (n_x - 1);
        const double u = utility_w(params, p, x);
        if (u > best_u) {  // strict: ties keep the smallest x
            best_u = u;
            best_x = x;
        }
    }
    return best_x;
}

double grid_best_p(const ModelParams& params, double x, int n_p, bool risk_averse) {
    if (n_p < 2) {
        throw std::invalid_argument("grid_best_p: need at least 2 grid points");
    }
    const auto ud = [&](double p) {
        return risk_averse ? utility_d_risk_averse(params, p, x) : utility_d_linear(params, p, x);
    };
    double best_p = 0.0;
    double best_u = ud(0.0);
    for (int i = 1; i < n_p; ++i) {
        const double p = static_cast<double>(i) / (n_p - 1);
        const double u = ud(p);
        if (u > best_u) {  // strict: ties keep the smallest p
            best_u = u;
            best_p = p;
        }
    }
    return best_p;
}

std::vector<StrategyPoint> grid_nash(const ModelParams& params, const GridSpec& grid) {
    params.validate();
    grid.validate();
    const int np = grid.n_p;
    const int nx = grid.n_x;

    std::vector<double> uw(static_cast<std::size_t>(np) * nx);
    std::vector<double> ud(static_cast<std::size_t>(np) * nx);
    std::vector<double> row_best(static_cast<std::size_t>(np),
                                 -std::numeric_limits<double>::infinity());
    std::vector<double> col_best(static_cast<std::size_t>(nx),
                                 -std::numeric_limits<double>::infinity());

    for (int i = 0; i < np; ++i) {
        const double p = static_cast<double>(i) / (np - 1);
        for (int j = 0; j < nx; ++j) {
            const double x = static_cast<double>(j) / (nx - 1);
            const std::size_t idx = static_cast<std::size_t>(i) * nx + j;
            uw[idx] = utility_w(params, p, x);
            ud[idx] = utility_d_risk_averse(params, p, x);
            row_best[static_cast<std::size_t>(i)] =
                std::max(row_best[static_cast<std::size_t>(i)], uw[idx]);
            col_best[static_cast<std::size_t>(j)] =
                std::max(col_best[static_cast<std::size_t>(j)], ud[idx]);
        }
    }

    std::vector<StrategyPoint> points;
    for (int i = 0; i < np; ++i) {
        const double p = static_cast<double>(i) / (np - 1);
        for (int j = 0; j < nx; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * nx + j;
            if (uw[idx] >= row_best[static_cast<std::size_t>(i)] - grid.eps &&
                ud[idx] >= col_best[static_cast<std::size_t>(j)] - grid.eps) {
                const double x = static_cast<double>(j) / (nx - 1);
                points.push_back(StrategyPoint{p, x, uw[idx], ud[idx]});
            }
        }
    }
    return points;
}

std::vector<GridCluster> cluster_grid_points(const std::vector<StrategyPoint>& points,
                                             const ModelParams& params, const GridSpec& grid) {
    grid.validate();
    if (points.empty()) return {};

    // Union-find over points with 8-adjacency on the grid indices; linear in
    // the number of qualifying points.
    const double dp = 1.0 / (grid.n_p - 1);
    const double dx = 1.0 / (grid.n_x - 1);
    std::vector<std::size_t> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    // Stride padding keeps column offsets from wrapping into adjacent rows.
    const long stride = grid.n_x + 2;
    const auto cell_of = [&](const StrategyPoint& pt) {
        const long i = std::lround(pt.p / dp);
        const long j = std::lround(pt.x / dx);
        return i * stride + j;
    };
    std::map<long, std::size_t> by_cell;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        by_cell[cell_of(points[idx])] = idx;
    }
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const long cell = cell_of(points[idx]);
        for (long di = -1; di <= 1; ++di) {
            for (long dj = -1; dj <= 1; ++dj) {
                const auto neighbor = by_cell.find(cell + di * stride + dj);
                if (neighbor != by_cell.end()) {
                    parent[find(idx)] = find(neighbor->second);
                }
            }
        }
    }

    struct Accumulator {
        GridCluster cluster;
        double sum_p = 0.0;
        double sum_x = 0.0;
    };
    std::map<std::size_t, Accumulator> by_root;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Accumulator& acc = by_root[find(i)];
        if (acc.cluster.size == 0) {
            acc.cluster.p_lo = acc.cluster.x_lo = 1.0;
            acc.cluster.p_hi = acc.cluster.x_hi = 0.0;
        }
        ++acc.cluster.size;
        acc.sum_p += points[i].p;
        acc.sum_x += points[i].x;
        acc.cluster.p_lo = std::min(acc.cluster.p_lo, points[i].p);
        acc.cluster.p_hi = std::max(acc.cluster.p_hi, points[i].p);
        acc.cluster.x_lo = std::min(acc.cluster.x_lo, points[i].x);
        acc.cluster.x_hi = std::max(acc.cluster.x_hi, points[i].x);
    }

    std::vector<GridCluster> clusters;
    clusters.reserve(by_root.size());
    for (auto& [root, acc] : by_root) {
        const double p = acc.sum_p / acc.cluster.size;
        const double x = acc.sum_x / acc.cluster.size;
        acc.cluster.representative = StrategyPoint{p, x, utility_w(params, p, x),
                                                   utility_d_risk_averse(params, p, x)};
        clusters.push_back(acc.cluster);
    }
    std::sort(clusters.begin(), clusters.end(), [](const GridCluster& a, const GridCluster& b) {
        if (a.representative.p != b.representative.p) return a.representative.p < b.representative.p;
        return a.representative.x < b.representative.x;
    });
    return clusters;
}

StrategyPoint grid_stackelberg(const ModelParams& params, const GridSpec& grid) {
    params.validate();
    grid.validate();
    StrategyPoint best{0.0, grid_best_x(params, 0.0, grid.n_x), 0.0, 0.0};
    best.uW = utility_w(params, best.p, best.x);
    best.uD = utility_d_linear(params, best.p, best.x);
    for (int i = 1; i < grid.n_p; ++i) {
        const double p = static_cast<double>(i) / (grid.n_p - 1);
        const double x = grid_best_x(params, p, grid.n_x);
        const double ud = utility_d_linear(params, p, x);
        if (ud > best.uD) {  // strict: ties keep the smallest p
            best = StrategyPoint{p, x, utility_w(params, p, x), ud};
        }
    }
    return best;
}

}  // namespace cryptoeq
