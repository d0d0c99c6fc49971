#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tbd/errors.hpp"

namespace tbd {

enum class SpaceKind { Position, PositionVelocity };
enum class Metric { Chebyshev, EuclideanRounded };

struct PositionState {
    int row = 0;
    int col = 0;
    bool operator==(const PositionState&) const = default;
};

struct PosVelState {
    int row = 0;
    int col = 0;
    int vrow = 0;  // pixels/frame
    int vcol = 0;
    bool operator==(const PosVelState&) const = default;
};

/// Distance between two pixel displacements under the space metric.
/// Chebyshev: max(|dr|,|dc|). EuclideanRounded: round(hypot(dr,dc)).
int offset_distance(Metric metric, int dr, int dc);

/// The set of candidate target states with its one-step transition
/// structure, stored as CSR adjacency over flat state indices.
///
/// Position spaces: states are pixels; a transition i->j is allowed when
/// the displacement is at most v1 under the metric. The relation is
/// symmetric, so predecessor and successor rows coincide.
///
/// Position-velocity spaces: states are (pixel, velocity) with per-axis
/// speed strictly below v1; a transition i->j requires the velocity
/// change to be strictly below a1 and the new position to equal the old
/// position advanced by the NEW velocity.
///
/// Neighborhoods are clipped at the frame border (no wraparound) and
/// enumerated in row-major offset order, which fixes argmax tie-breaking
/// everywhere downstream. Instances are immutable after construction and
/// safe to share across threads.
class StateSpace {
public:
    static constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

    static StateSpace position(int H, int W, int v1, Metric metric = Metric::Chebyshev);
    static StateSpace position_velocity(int H, int W, int v1, int a1,
                                        Metric metric = Metric::Chebyshev);

    SpaceKind kind() const { return kind_; }
    int height() const { return H_; }
    int width() const { return W_; }
    int v1() const { return v1_; }
    int a1() const { return a1_; }
    Metric metric() const { return metric_; }

    /// Number of states N.
    int size() const { return n_states_; }
    /// Largest neighborhood size M over all states.
    int max_neighborhood() const { return max_nbhd_; }
    /// Total number of transitions (edges of the one-step graph).
    int64_t num_edges() const { return static_cast<int64_t>(succ_idx_.size()); }

    int index_of(const PositionState& s) const;
    int index_of(const PosVelState& s) const;
    bool valid(const PositionState& s) const;
    bool valid(const PosVelState& s) const;
    /// Positional part of any state.
    PositionState position_of(int idx) const;
    /// Full decode; PositionVelocity spaces only.
    PosVelState posvel_of(int idx) const;

    /// Forward neighborhood N(i): states reachable from i in one step.
    std::span<const int32_t> successors(int i) const {
        return {succ_idx_.data() + succ_off_[i],
                static_cast<size_t>(succ_off_[i + 1] - succ_off_[i])};
    }
    /// States i with j in N(i); equals successors(j) for position spaces.
    std::span<const int32_t> predecessors(int j) const {
        return {pred_idx_.data() + pred_off_[j],
                static_cast<size_t>(pred_off_[j + 1] - pred_off_[j])};
    }

    /// Edge values are stored destination-major: the weight of edge i->j
    /// lives at pred_row_offset(j) + (slot of i in predecessors(j)).
    int64_t pred_row_offset(int j) const { return pred_off_[j]; }
    /// For source i, the destination-major value positions of its
    /// outgoing edges, aligned with successors(i).
    std::span<const int64_t> successor_value_positions(int i) const {
        return {succ_value_pos_.data() + succ_off_[i],
                static_cast<size_t>(succ_off_[i + 1] - succ_off_[i])};
    }

    /// Minimum number of transitions connecting i to j;
    /// kInfiniteDistance when no path exists. Closed form for Chebyshev
    /// position spaces, BFS otherwise.
    int graph_distance(int i, int j) const;

    /// Row-major displacement offsets of the interior position
    /// neighborhood (position spaces only).
    std::span<const PositionState> position_offsets() const {
        return {offsets_.data(), offsets_.size()};
    }

private:
    StateSpace() = default;
    void build_position_adjacency();
    void build_posvel_adjacency();
    void build_value_positions();
    int bfs_distance(int i, int j) const;

    SpaceKind kind_ = SpaceKind::Position;
    Metric metric_ = Metric::Chebyshev;
    int H_ = 0, W_ = 0, v1_ = 1, a1_ = 0;
    int n_states_ = 0;
    int max_nbhd_ = 0;
    int nvel_ = 1;       // velocities per axis (position-velocity)
    std::vector<PositionState> offsets_;  // interior offsets, position spaces

    std::vector<int64_t> succ_off_;
    std::vector<int32_t> succ_idx_;
    std::vector<int64_t> pred_off_;
    std::vector<int32_t> pred_idx_;
    std::vector<int64_t> succ_value_pos_;
};

/// Collapse a per-state field on a position-velocity space to the
/// positional grid by maximizing over velocities at each position.
std::vector<double> project_to_position(const StateSpace& space,
                                        std::span<const double> field);

}  // namespace tbd
