#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "rtkit/dijkstra.hpp"
#include "rtkit/graph.hpp"
#include "rtkit/rng.hpp"

namespace rtkit {

// 4-approximate girth in three phases.
//
//   Phase I   samples a multiset S1 of ~c1 n^{1/3} vertices, runs full in/out
//             Dijkstra from each and keeps the best roundtrip through them.
//   Phase II  derives per-vertex eliminator sets R1 from S1, uses them to
//             grow pruned balls B2out/B2in (plus the tighter B4out tag) for
//             every distinct vertex of a second multiset S2 of ~c2 n^{2/3},
//             and checks cycles inside the ball intersections.
//   Phase III derives eliminators R2 from S2 and runs, from every vertex, a
//             modified in-Dijkstra that only expands vertices surviving the
//             R1/R2 elimination conditions, closing cycles over out-edges.
//
// Sampling only affects running time; every candidate the phases emit is a
// real closed-walk length, so the estimate always lands in [g, 4g]. If a
// pruned ball outgrows its high-probability cap the attempt aborts and the
// caller retries with a fresh seed (Las Vegas).

struct Girth4Config {
    double c1 = 100.0;            // |S1| ~ c1 * n^{1/3}
    double c2 = 100.0;            // |S2| ~ c2 * n^{2/3}
    std::uint32_t retry_limit = 5;
    double ball_cap_scale = 1.0;  // scales the Las Vegas ball-size caps
    unsigned threads = 1;
};

enum class GirthPhase { None, ZeroCycle, Phase1, Phase2, Phase3 };

struct GirthEstimate {
    Dist value = kInf;
    // Closed walk in the original graph realizing `value`; empty iff infinite.
    std::vector<std::uint32_t> witness;
    GirthPhase phase = GirthPhase::None;
};

// Balls kept for each distinct phase-II sample. out2/in2 carry exact member
// distances; out4 tags the out2 members that also pass the 4-approximation
// condition.
struct StoredBalls {
    BallSet out2;
    BallSet in2;
    std::unordered_set<std::uint32_t> out4;
};

// One Las Vegas attempt on a strongly connected graph. Exposes its sample
// streams, eliminator tables, balls and per-phase estimates so property
// checks can audit every intermediate object.
class Girth4Run {
  public:
    enum class Outcome { Ok, BallCapExceeded };

    Girth4Run(const WeightedDigraph& g, const Girth4Config& cfg, std::uint64_t seed);

    Outcome run();

    const WeightedDigraph& graph() const { return g_; }

    // When set (regularized inputs), zero-length candidates are dropped:
    // they can only arise from gadget-only cycles.
    bool reject_zero_candidates = false;

    // Sampling state. Streams are multisets in draw order; when a target
    // size reaches n the stream clamps to every vertex exactly once and the
    // remaining phases are skipped (the estimate is already exact after
    // phase I, resp. 2-approximate after phase II).
    std::vector<std::uint32_t> s1_stream, s2_stream;
    std::vector<std::uint32_t> s1_distinct, s2_distinct;
    bool s1_clamped = false, s2_clamped = false;

    // Full distance vectors for every distinct phase-I sample.
    struct SourceDist {
        std::vector<Dist> out; // d(s, .)
        std::vector<Dist> in;  // d(., s)
    };
    const SourceDist& s1_dist(std::uint32_t s) const { return s1_arrays_[slot1_at(s)]; }
    bool has_s1(std::uint32_t s) const { return s1_slot_[s] != kNoVertex; }

    // Eliminator tables, each entry a subset of the matching sample set with
    // size at most 10 ceil(log2 n).
    std::vector<std::vector<std::uint32_t>> r1_out, r1_in, r2_in;

    const StoredBalls& balls_of(std::uint32_t s2) const { return balls_[slot2_at(s2)]; }
    bool has_balls(std::uint32_t s2) const { return s2_slot_[s2] != kNoVertex; }

    // Doubled distance underestimate 2 * ud(u, r2) (signed; the minimum in
    // the fallback case may be negative). Requires balls_of(r2).
    detail::i128 underestimate2x(std::uint32_t u, std::uint32_t r2) const;

    // Modified in-Dijkstra membership set for v (phase III object), computed
    // on demand; requires a completed run with phase III executed.
    BallSet compute_btilde(std::uint32_t v) const;

    Dist est_phase1 = kInf, est_phase2 = kInf, est_phase3 = kInf;
    Dist estimate() const { return est_phase3; }
    std::vector<std::uint32_t> witness;
    GirthPhase witness_phase = GirthPhase::None;

    bool phase2_ran = false, phase3_ran = false;

    // Budget accounting: phase 1 runs 2|S1| Dijkstras (duplicates in the
    // multiset recompute), phase 2 runs 2 per distinct s2, phase 3 one per
    // vertex.
    std::uint64_t dij_phase1 = 0, dij_phase2 = 0, dij_phase3 = 0;
    std::size_t eliminator_iters = 0; // 10 ceil(log2 n)
    std::size_t max_ball2 = 0, max_btilde = 0;
    std::vector<std::size_t> ball2_sizes, btilde_sizes;

  private:
    std::uint32_t slot1_at(std::uint32_t s) const;
    std::uint32_t slot2_at(std::uint32_t s) const;

    void draw_streams();
    void phase1();
    std::vector<std::vector<std::uint32_t>> compute_eliminators_1(Direction dir);
    StoredBalls make_balls(std::uint32_t s2) const;
    bool phase2(); // false on cap breach
    void compute_eliminators_2();
    bool phase3(); // false on cap breach

    bool ball2_hook(std::uint32_t owner, Direction dir, std::uint32_t u, Dist settled) const;
    bool ball4_member(std::uint32_t owner, std::uint32_t u, Dist exact) const;
    bool btilde_hook(std::uint32_t v, const std::vector<std::uint32_t>& r2s,
                     const std::vector<Dist>& d_r2_v, std::uint32_t s, Dist settled) const;

    void consider(Dist value, GirthPhase phase, std::vector<std::uint32_t>&& walk);

    const WeightedDigraph& g_;
    Girth4Config cfg_;
    Rng rng_;
    std::size_t per_iter_1_ = 0, per_iter_2_ = 0;
    std::vector<std::uint32_t> s1_slot_, s2_slot_;
    std::vector<SourceDist> s1_arrays_;
    std::vector<StoredBalls> balls_;
    std::size_t cap_ball2_ = 0, cap_btilde_ = 0;
    Dist walk_best_ = kInf; // value realized by the current witness
};

struct Girth4Stats {
    std::uint32_t scc_count = 0;
    std::uint32_t nontrivial_sccs = 0;
    std::uint32_t retries = 0;
    bool zero_cycle_shortcut = false;
    bool exact_path = false; // every component ran with clamped S1
    std::uint64_t dijkstra_total = 0;
    std::uint64_t dij_phase1 = 0, dij_phase2 = 0, dij_phase3 = 0;
    std::uint64_t regularized_vertices = 0, regularized_edges = 0;
    // log2-bucketed ball size histograms
    std::vector<std::uint64_t> ball2_hist, btilde_hist;
    double ms_total = 0.0;
};

struct Girth4Output {
    GirthEstimate estimate;
    Girth4Stats stats;
};

// Full pipeline: zero-cycle pre-check, SCC decomposition, per-SCC degree
// regularization, phases I-III per component (with Las Vegas retries), and
// witness mapping back to the input graph. Acyclic inputs give kInf.
Girth4Output approx_girth_4(const WeightedDigraph& g, std::uint64_t seed,
                            const Girth4Config& cfg = {});

} // namespace rtkit
