#include "tbd/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace tbd {

int offset_distance(Metric metric, int dr, int dc) {
    switch (metric) {
        case Metric::Chebyshev:
            return std::max(std::abs(dr), std::abs(dc));
        case Metric::EuclideanRounded:
            return static_cast<int>(std::llround(std::hypot(double(dr), double(dc))));
    }
    return 0;
}

StateSpace StateSpace::position(int H, int W, int v1, Metric metric) {
    if (H < 1 || W < 1) throw ConfigError("state space: frame dimensions must be >= 1");
    if (v1 < 1) throw ConfigError("state space: v1 must be >= 1");
    StateSpace s;
    s.kind_ = SpaceKind::Position;
    s.metric_ = metric;
    s.H_ = H;
    s.W_ = W;
    s.v1_ = v1;
    s.n_states_ = H * W;
    for (int dr = -v1; dr <= v1; ++dr)
        for (int dc = -v1; dc <= v1; ++dc)
            if (offset_distance(metric, dr, dc) <= v1) s.offsets_.push_back({dr, dc});
    s.build_position_adjacency();
    s.build_value_positions();
    return s;
}

StateSpace StateSpace::position_velocity(int H, int W, int v1, int a1, Metric metric) {
    if (H < 1 || W < 1) throw ConfigError("state space: frame dimensions must be >= 1");
    if (v1 < 1) throw ConfigError("state space: v1 must be >= 1");
    if (a1 < 1) throw ConfigError("state space: a1 must be >= 1");
    StateSpace s;
    s.kind_ = SpaceKind::PositionVelocity;
    s.metric_ = metric;
    s.H_ = H;
    s.W_ = W;
    s.v1_ = v1;
    s.a1_ = a1;
    s.nvel_ = 2 * v1 - 1;  // per-axis velocities, strictly below v1 in magnitude
    s.n_states_ = H * W * s.nvel_ * s.nvel_;
    s.build_posvel_adjacency();
    s.build_value_positions();
    return s;
}

int StateSpace::index_of(const PositionState& s) const {
    if (!valid(s))
        throw PreconditionError("state (" + std::to_string(s.row) + "," +
                                std::to_string(s.col) + ") outside frame");
    return s.row * W_ + s.col;
}

int StateSpace::index_of(const PosVelState& s) const {
    if (kind_ != SpaceKind::PositionVelocity)
        throw PreconditionError("position space cannot index velocity states");
    if (!valid(s)) throw PreconditionError("position-velocity state out of bounds");
    const int vi = (s.vrow + v1_ - 1) * nvel_ + (s.vcol + v1_ - 1);
    return (s.row * W_ + s.col) * nvel_ * nvel_ + vi;
}

bool StateSpace::valid(const PositionState& s) const {
    return s.row >= 0 && s.row < H_ && s.col >= 0 && s.col < W_;
}

bool StateSpace::valid(const PosVelState& s) const {
    return s.row >= 0 && s.row < H_ && s.col >= 0 && s.col < W_ &&
           std::abs(s.vrow) < v1_ && std::abs(s.vcol) < v1_;
}

PositionState StateSpace::position_of(int idx) const {
    if (kind_ == SpaceKind::Position) return {idx / W_, idx % W_};
    const int p = idx / (nvel_ * nvel_);
    return {p / W_, p % W_};
}

PosVelState StateSpace::posvel_of(int idx) const {
    if (kind_ != SpaceKind::PositionVelocity)
        throw PreconditionError("position space has no velocity components");
    const int nv2 = nvel_ * nvel_;
    const int p = idx / nv2;
    const int v = idx % nv2;
    return {p / W_, p % W_, v / nvel_ - (v1_ - 1), v % nvel_ - (v1_ - 1)};
}

void StateSpace::build_position_adjacency() {
    succ_off_.assign(n_states_ + 1, 0);
    for (int r = 0; r < H_; ++r) {
        for (int c = 0; c < W_; ++c) {
            int count = 0;
            for (const auto& o : offsets_) {
                const int nr = r + o.row, nc = c + o.col;
                if (nr >= 0 && nr < H_ && nc >= 0 && nc < W_) ++count;
            }
            succ_off_[r * W_ + c + 1] = count;
        }
    }
    for (int i = 0; i < n_states_; ++i) succ_off_[i + 1] += succ_off_[i];
    succ_idx_.resize(succ_off_[n_states_]);
    for (int r = 0; r < H_; ++r) {
        for (int c = 0; c < W_; ++c) {
            int64_t pos = succ_off_[r * W_ + c];
            for (const auto& o : offsets_) {
                const int nr = r + o.row, nc = c + o.col;
                if (nr >= 0 && nr < H_ && nc >= 0 && nc < W_)
                    succ_idx_[pos++] = nr * W_ + nc;
            }
        }
    }
    // Offsets are symmetric under negation and enumerated row-major, so
    // the predecessor rows coincide with the successor rows.
    pred_off_ = succ_off_;
    pred_idx_ = succ_idx_;
    max_nbhd_ = static_cast<int>(offsets_.size());
}

void StateSpace::build_posvel_adjacency() {
    const int nv = nvel_;
    const int vmax = v1_ - 1;
    succ_off_.assign(n_states_ + 1, 0);
    pred_off_.assign(n_states_ + 1, 0);

    auto for_each_succ = [&](int r, int c, int vr, int vc, auto&& fn) {
        for (int jvr = -vmax; jvr <= vmax; ++jvr) {
            for (int jvc = -vmax; jvc <= vmax; ++jvc) {
                if (offset_distance(metric_, vr - jvr, vc - jvc) >= a1_) continue;
                const int nr = r + jvr, nc = c + jvc;
                if (nr < 0 || nr >= H_ || nc < 0 || nc >= W_) continue;
                fn(((nr * W_ + nc) * nv + (jvr + vmax)) * nv + (jvc + vmax));
            }
        }
    };
    auto for_each_pred = [&](int r, int c, int vr, int vc, auto&& fn) {
        // The source position is fully determined by the destination
        // velocity; only the source velocity varies.
        const int pr = r - vr, pc = c - vc;
        if (pr < 0 || pr >= H_ || pc < 0 || pc >= W_) return;
        for (int ivr = -vmax; ivr <= vmax; ++ivr)
            for (int ivc = -vmax; ivc <= vmax; ++ivc)
                if (offset_distance(metric_, ivr - vr, ivc - vc) < a1_)
                    fn(((pr * W_ + pc) * nv + (ivr + vmax)) * nv + (ivc + vmax));
    };

    for (int idx = 0; idx < n_states_; ++idx) {
        const PosVelState s = posvel_of(idx);
        int ns = 0, np = 0;
        for_each_succ(s.row, s.col, s.vrow, s.vcol, [&](int) { ++ns; });
        for_each_pred(s.row, s.col, s.vrow, s.vcol, [&](int) { ++np; });
        succ_off_[idx + 1] = ns;
        pred_off_[idx + 1] = np;
        max_nbhd_ = std::max(max_nbhd_, ns);
    }
    for (int i = 0; i < n_states_; ++i) {
        succ_off_[i + 1] += succ_off_[i];
        pred_off_[i + 1] += pred_off_[i];
    }
    succ_idx_.resize(succ_off_[n_states_]);
    pred_idx_.resize(pred_off_[n_states_]);
    for (int idx = 0; idx < n_states_; ++idx) {
        const PosVelState s = posvel_of(idx);
        int64_t sp = succ_off_[idx], pp = pred_off_[idx];
        for_each_succ(s.row, s.col, s.vrow, s.vcol,
                      [&](int j) { succ_idx_[sp++] = j; });
        for_each_pred(s.row, s.col, s.vrow, s.vcol,
                      [&](int i) { pred_idx_[pp++] = i; });
    }
}

void StateSpace::build_value_positions() {
    // Walking destinations in ascending order visits each source's
    // successors in ascending destination order, which is exactly the
    // successor enumeration order.
    succ_value_pos_.resize(succ_idx_.size());
    std::vector<int64_t> cursor(succ_off_.begin(), succ_off_.end() - 1);
    for (int j = 0; j < n_states_; ++j) {
        for (int64_t p = pred_off_[j]; p < pred_off_[j + 1]; ++p) {
            const int i = pred_idx_[p];
            succ_value_pos_[cursor[i]++] = p;
        }
    }
}

int StateSpace::graph_distance(int i, int j) const {
    if (i < 0 || i >= n_states_ || j < 0 || j >= n_states_)
        throw PreconditionError("graph_distance: state index out of range");
    if (i == j) return 0;
    if (kind_ == SpaceKind::Position && metric_ == Metric::Chebyshev) {
        const PositionState a = position_of(i), b = position_of(j);
        const int d = std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
        return (d + v1_ - 1) / v1_;
    }
    return bfs_distance(i, j);
}

int StateSpace::bfs_distance(int i, int j) const {
    std::vector<int32_t> dist(n_states_, -1);
    std::deque<int32_t> queue;
    dist[i] = 0;
    queue.push_back(i);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == j) return dist[u];
        for (int32_t v : successors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return kInfiniteDistance;
}

std::vector<double> project_to_position(const StateSpace& space,
                                        std::span<const double> field) {
    if (space.kind() != SpaceKind::PositionVelocity)
        throw PreconditionError("project_to_position requires a position-velocity space");
    if (static_cast<int>(field.size()) != space.size())
        throw PreconditionError("project_to_position: field size mismatch");
    const int npos = space.height() * space.width();
    const int nv2 = space.size() / npos;
    std::vector<double> out(npos, -std::numeric_limits<double>::infinity());
    for (int p = 0; p < npos; ++p) {
        double m = field[static_cast<size_t>(p) * nv2];
        for (int v = 1; v < nv2; ++v)
            m = std::max(m, field[static_cast<size_t>(p) * nv2 + v]);
        out[p] = m;
    }
    return out;
}

}  // namespace tbd
