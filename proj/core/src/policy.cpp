// SPDX-License-Identifier: Apache-2.0
//
// crpla: challenge-response physical-layer authentication simulator
// Copyright (C) 2026 crpla project contributors
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

#include "crpla/policy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crpla {

namespace {

constexpr double kStrategicFloor = 1e-9;

struct ClassGeometry {
    std::vector<double> xs;
    std::vector<double> ys;
};

std::vector<ClassGeometry> class_geometries(const ChannelMap& map) {
    std::vector<ClassGeometry> out(map.classes.size());
    for (std::size_t a = 0; a < map.classes.size(); ++a) {
        const auto& members = map.classes[a];
        if (members.empty())
            throw std::invalid_argument("policy: empty challenge class");
        out[a].xs.reserve(members.size());
        out[a].ys.reserve(members.size());
        for (int v : members) {
            out[a].xs.push_back(map.grid.x_of(v));
            out[a].ys.push_back(map.grid.y_of(v));
        }
    }
    return out;
}

} // namespace

std::string to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::bellman: return "bi";
        case PolicyKind::greedy: return "pg";
        case PolicyKind::decaying_std: return "std";
    }
    return "unknown";
}

PolicyTable solve_value_iteration(const ChannelMap& map, const EnergyModel& model, double gamma,
                                  double tol, int max_iters) {
    model.validate();
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("solve_value_iteration: gamma must lie in (0, 1)");
    if (!(tol > 0.0))
        throw std::invalid_argument("solve_value_iteration: tol must be positive");
    if (max_iters < 1)
        throw std::invalid_argument("solve_value_iteration: max_iters must be >= 1");

    const int n = map.size();
    const int a_count = map.num_challenges();
    if (a_count == 0)
        throw std::invalid_argument("solve_value_iteration: map has no challenge classes");
    const auto geom = class_geometries(map);

    std::vector<double> px(n), py(n);
    for (int x = 0; x < n; ++x) {
        px[x] = map.grid.x_of(x);
        py[x] = map.grid.y_of(x);
    }

    const double scale = model.alpha1_j_per_s / model.velocity_m_per_s;
    const double offset = model.alpha0_j;
    const double inv_a = 1.0 / a_count;

    const std::size_t slots = static_cast<std::size_t>(a_count) * n;
    std::vector<double> value(slots, 0.0);
    std::vector<double> value_next(slots, 0.0);
    std::vector<double> discounted_mean(n, 0.0);
    std::vector<double> gathered;

    PolicyTable table;
    table.kind = PolicyKind::bellman;
    table.gamma = gamma;
    table.num_positions = n;
    table.num_challenges = a_count;

    // Caller-visible contract: discounted_mean[v] = gamma * mean_a V(v, a).
    const auto refresh_discounted_mean = [&]() {
        for (int v = 0; v < n; ++v) {
            double sum = 0.0;
            for (int a = 0; a < a_count; ++a)
                sum += value[static_cast<std::size_t>(a) * n + v];
            discounted_mean[v] = gamma * sum * inv_a;
        }
    };

    for (int iter = 1; iter <= max_iters; ++iter) {
        refresh_discounted_mean();
        double delta = 0.0;
        for (int a = 0; a < a_count; ++a) {
            const auto& members = map.classes[a];
            const std::size_t m = members.size();
            gathered.resize(m);
            for (std::size_t j = 0; j < m; ++j)
                gathered[j] = discounted_mean[members[j]];
            const double* cx = geom[a].xs.data();
            const double* cy = geom[a].ys.data();
            const double* g = gathered.data();
            for (int x = 0; x < n; ++x) {
                const double x0 = px[x];
                const double y0 = py[x];
                double best = -std::numeric_limits<double>::infinity();
                for (std::size_t j = 0; j < m; ++j) {
                    const double dx = x0 - cx[j];
                    const double dy = y0 - cy[j];
                    double cost = scale * std::sqrt(dx * dx + dy * dy) - offset;
                    if (cost < 0.0) cost = 0.0;
                    const double score = g[j] - cost;
                    if (score > best) best = score;
                }
                const std::size_t slot = static_cast<std::size_t>(a) * n + x;
                value_next[slot] = best;
                const double change = std::abs(best - value[slot]);
                if (change > delta) delta = change;
            }
        }
        value.swap(value_next);
        table.sweep_deltas.push_back(delta);
        table.iterations_used = iter;
        if (delta < tol) break;
    }

    // Extract the policy greedy in the converged values; the class member
    // list is ascending, so strict improvement keeps the lowest index.
    refresh_discounted_mean();
    table.next_position.resize(slots);
    for (int a = 0; a < a_count; ++a) {
        const auto& members = map.classes[a];
        for (int x = 0; x < n; ++x) {
            double best = -std::numeric_limits<double>::infinity();
            int best_pos = members.front();
            for (std::size_t j = 0; j < members.size(); ++j) {
                const double score = discounted_mean[members[j]] -
                                     model.of_distance(map.grid.planar_distance_m(x, members[j]));
                if (score > best) {
                    best = score;
                    best_pos = members[j];
                }
            }
            table.next_position[static_cast<std::size_t>(a) * n + x] = best_pos;
        }
    }
    table.values = std::move(value);
    return table;
}

int greedy_next(int current, double challenge_db, const ChannelMap& map, const EnergyModel& model) {
    if (current < 0 || current >= map.size())
        throw std::out_of_range("greedy_next: current position outside the grid");
    const auto& members = map.classes[map.class_index_of(challenge_db)];
    double best = std::numeric_limits<double>::infinity();
    int best_pos = members.front();
    for (int v : members) {
        const double cost = energy(current, v, model, map.grid);
        if (cost < best) {
            best = cost;
            best_pos = v;
        }
    }
    return best_pos;
}

StrategicField strategic_field(const ChannelMap& map, int window_l, double delta, double beta) {
    if (window_l < 1 || window_l % 2 == 0)
        throw std::invalid_argument("strategic_field: window_l must be an odd count >= 1");
    if (!(delta >= 0.0))
        throw std::invalid_argument("strategic_field: delta must be non-negative");
    if (!(beta > 0.0))
        throw std::invalid_argument("strategic_field: beta must be positive");

    StrategicField field;
    field.window_l = window_l;
    field.delta = delta;
    field.beta = beta;
    field.y.resize(map.size());

    const int half = window_l / 2;
    for (int idx = 0; idx < map.size(); ++idx) {
        const int row = map.grid.row_of(idx);
        const int col = map.grid.col_of(idx);
        const int r0 = std::max(0, row - half);
        const int r1 = std::min(map.grid.n2 - 1, row + half);
        const int c0 = std::max(0, col - half);
        const int c1 = std::min(map.grid.n1 - 1, col + half);
        // The window mean is taken over the positions actually present, so
        // truncated edge windows measure genuine local spread instead of
        // acquiring a deviation offset from the missing off-grid cells.
        const int count = (r1 - r0 + 1) * (c1 - c0 + 1);
        double sum = 0.0;
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c)
                sum += map.quantized_db[map.grid.index_of(c, r)];
        const double mu = sum / count;
        double dev_sq = 0.0;
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c) {
                const double d = map.quantized_db[map.grid.index_of(c, r)] - mu;
                dev_sq += d * d;
            }
        field.y[idx] = std::sqrt(dev_sq);
        if (field.y[idx] > field.max_y) field.max_y = field.y[idx];
    }
    return field;
}

int std_next(int current, double challenge_db, int t, const StrategicField& field,
             const ChannelMap& map, const EnergyModel& model) {
    if (current < 0 || current >= map.size())
        throw std::out_of_range("std_next: current position outside the grid");
    if (t < 0)
        throw std::invalid_argument("std_next: step count must be non-negative");
    if (field.y.size() != static_cast<std::size_t>(map.size()))
        throw std::invalid_argument("std_next: strategic field does not match the map");

    const double decay = field.delta * std::exp(-double(t) / field.beta);
    if (decay * field.max_y < kStrategicFloor)
        return greedy_next(current, challenge_db, map, model);

    const auto& members = map.classes[map.class_index_of(challenge_db)];
    double best = -std::numeric_limits<double>::infinity();
    int best_pos = members.front();
    for (int v : members) {
        const double score = decay * field.y[v] - energy(current, v, model, map.grid);
        if (score > best) {
            best = score;
            best_pos = v;
        }
    }
    return best_pos;
}

PolicyTable make_greedy_table(const ChannelMap& map, const EnergyModel& model) {
    PolicyTable table;
    table.kind = PolicyKind::greedy;
    table.num_positions = map.size();
    table.num_challenges = map.num_challenges();
    table.next_position.resize(static_cast<std::size_t>(table.num_challenges) * table.num_positions);
    for (int a = 0; a < table.num_challenges; ++a)
        for (int x = 0; x < table.num_positions; ++x)
            table.next_position[static_cast<std::size_t>(a) * table.num_positions + x] =
                greedy_next(x, map.challenges_db[a], map, model);
    return table;
}

PolicyTable make_std_table(const ChannelMap& map, const EnergyModel& model,
                           const StrategicField& field, int t) {
    PolicyTable table;
    table.kind = PolicyKind::decaying_std;
    table.num_positions = map.size();
    table.num_challenges = map.num_challenges();
    table.next_position.resize(static_cast<std::size_t>(table.num_challenges) * table.num_positions);
    for (int a = 0; a < table.num_challenges; ++a)
        for (int x = 0; x < table.num_positions; ++x)
            table.next_position[static_cast<std::size_t>(a) * table.num_positions + x] =
                std_next(x, map.challenges_db[a], t, field, map, model);
    return table;
}

} // namespace crpla
