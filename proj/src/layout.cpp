#include "lodcloud/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

constexpr double kMinDistance = 1e-9;

double pair_distance(const std::pair<double, double>& a,
                     const std::pair<double, double>& b) {
    const double dx = a.first - b.first;
    const double dy = a.second - b.second;
    return std::max(std::sqrt(dx * dx + dy * dy), kMinDistance);
}

} // namespace

LayoutResult layout_fruchterman_reingold(const UndirectedView& view,
                                         int iterations,
                                         unsigned long long seed,
                                         std::vector<double>* energy_trace) {
    const int n = view.vertex_count();
    if (n < 1)
        throw EmptyGraphError("layout needs at least one vertex");
    if (iterations < 1)
        throw DomainError("layout needs at least one iteration");

    LayoutResult result;
    result.iterations = iterations;
    result.seed = seed;
    if (energy_trace)
        energy_trace->clear();

    if (n == 1) {
        result.positions.assign(1, {0.5, 0.5});
        if (energy_trace)
            energy_trace->assign(iterations, 0.0);
        return result;
    }

    std::mt19937 engine(static_cast<std::mt19937::result_type>(seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    result.positions.resize(n);
    for (auto& [x, y] : result.positions) {
        x = unit(engine);
        y = unit(engine);
    }

    const double k = std::sqrt(1.0 / n);
    std::vector<std::pair<double, double>> disp(n);
    for (int iteration = 0; iteration < iterations; ++iteration) {
        std::fill(disp.begin(), disp.end(), std::make_pair(0.0, 0.0));

        for (int v = 0; v < n; ++v) {
            for (int u = v + 1; u < n; ++u) {
                const double dx = result.positions[v].first - result.positions[u].first;
                const double dy = result.positions[v].second - result.positions[u].second;
                const double d = std::max(std::sqrt(dx * dx + dy * dy), kMinDistance);
                const double force = k * k / d;
                const double fx = dx / d * force;
                const double fy = dy / d * force;
                disp[v].first += fx;
                disp[v].second += fy;
                disp[u].first -= fx;
                disp[u].second -= fy;
            }
        }
        for (const auto& [a, b] : view.edges()) {
            const double dx = result.positions[a].first - result.positions[b].first;
            const double dy = result.positions[a].second - result.positions[b].second;
            const double d = std::max(std::sqrt(dx * dx + dy * dy), kMinDistance);
            const double force = d * d / k;
            const double fx = dx / d * force;
            const double fy = dy / d * force;
            disp[a].first -= fx;
            disp[a].second -= fy;
            disp[b].first += fx;
            disp[b].second += fy;
        }

        // Displacement cap cools linearly to zero across the run.
        const double temperature =
            0.1 * (1.0 - static_cast<double>(iteration) / iterations);
        for (int v = 0; v < n; ++v) {
            const double length = std::max(
                std::sqrt(disp[v].first * disp[v].first +
                          disp[v].second * disp[v].second),
                kMinDistance);
            const double step = std::min(length, temperature);
            double x = result.positions[v].first + disp[v].first / length * step;
            double y = result.positions[v].second + disp[v].second / length * step;
            result.positions[v] = {std::clamp(x, 0.0, 1.0), std::clamp(y, 0.0, 1.0)};
        }
        if (energy_trace)
            energy_trace->push_back(layout_energy(view, result));
    }
    return result;
}

double layout_energy(const UndirectedView& view, const LayoutResult& layout) {
    const int n = view.vertex_count();
    const double k = std::sqrt(1.0 / std::max(n, 1));
    double energy = 0.0;
    for (const auto& [a, b] : view.edges()) {
        const double d = pair_distance(layout.positions[a], layout.positions[b]);
        energy += d * d * d / (3.0 * k);
    }
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) {
            const double d = pair_distance(layout.positions[v], layout.positions[u]);
            energy -= k * k * std::log(d);
        }
    return energy;
}

} // namespace lodcloud
