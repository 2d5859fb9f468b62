#include "rtkit/girth4.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rtkit/parallel.hpp"
#include "rtkit/regularize.hpp"
#include "rtkit/scc.hpp"

namespace rtkit {

namespace {

using detail::i128;
using detail::u128;

std::uint32_t ceil_log2(std::uint32_t n) {
    std::uint32_t k = 0;
    while ((1ULL << k) < n) ++k;
    return k;
}

std::size_t size_hist_bucket(std::size_t s) {
    std::size_t b = 0;
    while ((static_cast<std::size_t>(1) << b) < s + 1) ++b;
    return b;
}

} // namespace

Girth4Run::Girth4Run(const WeightedDigraph& g, const Girth4Config& cfg, std::uint64_t seed)
    : g_(g), cfg_(cfg), rng_(seed) {
    const std::uint32_t n = g_.num_vertices();
    if (n < 2) throw std::invalid_argument("girth4 run needs n >= 2");
    s1_slot_.assign(n, kNoVertex);
    s2_slot_.assign(n, kNoVertex);
    r1_out.assign(n, {});
    r1_in.assign(n, {});
    r2_in.assign(n, {});

    const double log2n = std::log2(static_cast<double>(n));
    eliminator_iters = static_cast<std::size_t>(10) * ceil_log2(n);
    per_iter_1_ = static_cast<std::size_t>(std::ceil((cfg_.c1 / 10.0) * std::cbrt(static_cast<double>(n)) / log2n));
    per_iter_2_ = static_cast<std::size_t>(std::ceil((cfg_.c2 / 10.0) * std::pow(static_cast<double>(n), 2.0 / 3.0) / log2n));
    per_iter_1_ = std::max<std::size_t>(1, per_iter_1_);
    per_iter_2_ = std::max<std::size_t>(1, per_iter_2_);

    cap_ball2_ = static_cast<std::size_t>(
        std::ceil(4.0 * cfg_.ball_cap_scale * std::pow(static_cast<double>(n), 2.0 / 3.0) * log2n));
    cap_btilde_ = static_cast<std::size_t>(
        std::ceil(4.0 * cfg_.ball_cap_scale * std::cbrt(static_cast<double>(n)) * log2n));
}

std::uint32_t Girth4Run::slot1_at(std::uint32_t s) const {
    if (s1_slot_[s] == kNoVertex) throw std::logic_error("girth4: missing phase-1 arrays");
    return s1_slot_[s];
}

std::uint32_t Girth4Run::slot2_at(std::uint32_t s) const {
    if (s2_slot_[s] == kNoVertex) throw std::logic_error("girth4: missing stored balls");
    return s2_slot_[s];
}

void Girth4Run::draw_streams() {
    const std::uint32_t n = g_.num_vertices();
    // Stream sizes cover both the target c * n^{exp} and the eliminator
    // consumption (iteration counts are rounded up, so the consumption can
    // exceed the bare target); a stream reaching n collapses to full,
    // duplicate-free sampling.
    const std::uint64_t want1 = std::max<std::uint64_t>(
        static_cast<std::uint64_t>(std::ceil(cfg_.c1 * std::cbrt(static_cast<double>(n)))),
        eliminator_iters * per_iter_1_);
    const std::uint64_t want2 = std::max<std::uint64_t>(
        static_cast<std::uint64_t>(std::ceil(cfg_.c2 * std::pow(static_cast<double>(n), 2.0 / 3.0))),
        eliminator_iters * per_iter_2_);

    // Draw order: the full S1 stream, then the full S2 stream.
    s1_clamped = want1 >= n;
    if (s1_clamped) {
        s1_stream.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) s1_stream[v] = v;
    } else {
        s1_stream.reserve(want1);
        for (std::uint64_t i = 0; i < want1; ++i)
            s1_stream.push_back(static_cast<std::uint32_t>(rng_.below(n)));
    }
    s2_clamped = want2 >= n;
    if (s2_clamped) {
        s2_stream.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) s2_stream[v] = v;
    } else {
        s2_stream.reserve(want2);
        for (std::uint64_t i = 0; i < want2; ++i)
            s2_stream.push_back(static_cast<std::uint32_t>(rng_.below(n)));
    }
    for (std::uint32_t s : s1_stream)
        if (s1_slot_[s] == kNoVertex) {
            s1_slot_[s] = static_cast<std::uint32_t>(s1_distinct.size());
            s1_distinct.push_back(s);
        }
    for (std::uint32_t s : s2_stream)
        if (s2_slot_[s] == kNoVertex) {
            s2_slot_[s] = static_cast<std::uint32_t>(s2_distinct.size());
            s2_distinct.push_back(s);
        }
}

// Callers materialize the witness walk only when the value beats the best
// one seen so far, so an empty walk here just means "no improvement".
void Girth4Run::consider(Dist value, GirthPhase phase, std::vector<std::uint32_t>&& walk) {
    if (is_inf(value)) return;
    if (reject_zero_candidates && value == 0) return;
    Dist& current = phase == GirthPhase::Phase1   ? est_phase1
                    : phase == GirthPhase::Phase2 ? est_phase2
                                                  : est_phase3;
    if (value < current) current = value;
    if (value < walk_best_ && !walk.empty()) {
        walk_best_ = value;
        witness = std::move(walk);
        witness_phase = phase;
    }
}

void Girth4Run::phase1() {
    const std::uint32_t n = g_.num_vertices();
    const std::uint64_t before = dijkstra_invocations();
    s1_arrays_.resize(s1_distinct.size());

    // Chunked so parent arrays (needed only for the witness) stay transient.
    constexpr std::size_t kChunk = 32;
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t base = 0; base < s1_stream.size(); base += kChunk) {
        const std::size_t hi = std::min(base + kChunk, s1_stream.size());
        std::vector<DistanceArray> out_arr(hi - base), in_arr(hi - base);
        parallel_for(base, hi, cfg_.threads, [&](std::size_t idx) {
            const std::uint32_t s = s1_stream[idx];
            out_arr[idx - base] = dijkstra(g_, s, Direction::Out);
            in_arr[idx - base] = dijkstra(g_, s, Direction::In);
        });
        for (std::size_t idx = base; idx < hi; ++idx) {
            const std::uint32_t s = s1_stream[idx];
            DistanceArray& out = out_arr[idx - base];
            DistanceArray& in = in_arr[idx - base];
            if (seen[s]) continue; // duplicate sample: arrays identical, keep the first
            seen[s] = 1;
            // Best roundtrip through s.
            Dist best = kInf;
            std::uint32_t best_u = kNoVertex;
            for (std::uint32_t u = 0; u < n; ++u) {
                if (u == s) continue;
                const Dist rt = roundtrip(out.dist[u], in.dist[u]);
                if (reject_zero_candidates && rt == 0) continue;
                if (rt < best) {
                    best = rt;
                    best_u = u;
                }
            }
            if (best_u != kNoVertex && best < walk_best_) {
                std::vector<std::uint32_t> walk = extract_path(out, best_u); // s .. u
                std::vector<std::uint32_t> back = extract_path(in, best_u);  // u .. s
                walk.insert(walk.end(), back.begin() + 1, back.end());
                consider(best, GirthPhase::Phase1, std::move(walk));
            } else if (best_u != kNoVertex) {
                consider(best, GirthPhase::Phase1, {});
            }
            SourceDist sd;
            sd.out = std::move(out.dist);
            sd.in = std::move(in.dist);
            s1_arrays_[s1_slot_[s]] = std::move(sd);
        }
    }
    dij_phase1 = dijkstra_invocations() - before;
    if (dij_phase1 != 2 * static_cast<std::uint64_t>(s1_stream.size()))
        throw std::logic_error("girth4: phase-1 Dijkstra budget violated");
}

std::vector<std::vector<std::uint32_t>> Girth4Run::compute_eliminators_1(Direction dir) {
    const std::uint32_t n = g_.num_vertices();
    std::vector<std::vector<std::uint32_t>> table(n);
    std::size_t pos = 0;
    std::vector<std::vector<std::uint32_t>> tsets(n);
    for (std::size_t iter = 0; iter < eliminator_iters; ++iter) {
        if (pos + per_iter_1_ > s1_stream.size())
            throw std::logic_error("girth4: phase-1 sample stream exhausted");
        const std::size_t lo = pos, hi = pos + per_iter_1_;
        pos = hi;
        parallel_for(0, n, cfg_.threads, [&](std::size_t vi) {
            const auto v = static_cast<std::uint32_t>(vi);
            tsets[v].clear();
            for (std::size_t j = lo; j < hi; ++j) {
                const std::uint32_t s = s1_stream[j];
                const SourceDist& as = s1_arrays_[s1_slot_[s]];
                bool pass = true;
                for (std::uint32_t t : table[v]) {
                    const SourceDist& at = s1_arrays_[s1_slot_[t]];
                    bool keep;
                    if (dir == Direction::Out) {
                        // 2 d(v,s) + d(s,t) < 2 d(v,t) + d(t,s)
                        keep = 2 * detail::lift(as.in[v]) + detail::lift(as.out[t]) <
                               2 * detail::lift(at.in[v]) + detail::lift(at.out[s]);
                    } else {
                        // 2 d(s,v) + d(t,s) < 2 d(t,v) + d(s,t)
                        keep = 2 * detail::lift(as.out[v]) + detail::lift(at.out[s]) <
                               2 * detail::lift(at.out[v]) + detail::lift(as.out[t]);
                    }
                    if (!keep) {
                        pass = false;
                        break;
                    }
                }
                if (pass) tsets[v].push_back(s);
            }
        });
        // One uniformly chosen survivor joins each table; draws happen in
        // ascending vertex order to keep runs reproducible.
        for (std::uint32_t v = 0; v < n; ++v) {
            if (tsets[v].empty()) continue;
            const std::uint32_t pick = tsets[v][rng_.below(tsets[v].size())];
            if (std::find(table[v].begin(), table[v].end(), pick) == table[v].end())
                table[v].push_back(pick);
        }
    }
    return table;
}

bool Girth4Run::ball2_hook(std::uint32_t owner, Direction dir, std::uint32_t u, Dist settled) const {
    const auto& elim = dir == Direction::Out ? r1_out[owner] : r1_in[owner];
    for (std::uint32_t r1 : elim) {
        const SourceDist& ar = s1_arrays_[s1_slot_[r1]];
        bool keep;
        if (dir == Direction::Out) {
            // 2 d(v,r1) + d(r1,u) > 2 D[u] + d(u,r1)
            keep = 2 * detail::lift(ar.in[owner]) + detail::lift(ar.out[u]) >
                   2 * detail::lift(settled) + detail::lift(ar.in[u]);
        } else {
            // 2 d(r1,v) + d(u,r1) > 2 D[u] + d(r1,u)
            keep = 2 * detail::lift(ar.out[owner]) + detail::lift(ar.in[u]) >
                   2 * detail::lift(settled) + detail::lift(ar.out[u]);
        }
        if (!keep) return false;
    }
    return true;
}

bool Girth4Run::ball4_member(std::uint32_t owner, std::uint32_t u, Dist exact) const {
    for (std::uint32_t r1 : r1_out[owner]) {
        const SourceDist& ar = s1_arrays_[s1_slot_[r1]];
        // 4 d(v,r1) + d(r1,u) > 4 d(v,u) + 3 d(u,r1)
        if (!(4 * detail::lift(ar.in[owner]) + detail::lift(ar.out[u]) >
              4 * detail::lift(exact) + 3 * detail::lift(ar.in[u])))
            return false;
    }
    return true;
}

StoredBalls Girth4Run::make_balls(std::uint32_t s2) const {
    StoredBalls b;
    PrunedOptions popts;
    popts.max_members = cap_ball2_;
    b.out2 = pruned_dijkstra(
        g_, s2, Direction::Out,
        [&](std::uint32_t u, Dist d) { return ball2_hook(s2, Direction::Out, u, d); }, popts);
    b.in2 = pruned_dijkstra(
        g_, s2, Direction::In,
        [&](std::uint32_t u, Dist d) { return ball2_hook(s2, Direction::In, u, d); }, popts);
    if (!b.out2.truncated)
        for (const auto& e : b.out2.members)
            if (ball4_member(s2, e.v, e.dist)) b.out4.insert(e.v);
    return b;
}

bool Girth4Run::phase2() {
    const std::uint64_t before = dijkstra_invocations();
    balls_.resize(s2_distinct.size());
    bool cap_hit = false;

    constexpr std::size_t kChunk = 64;
    for (std::size_t base = 0; base < s2_distinct.size() && !cap_hit; base += kChunk) {
        const std::size_t hi = std::min(base + kChunk, s2_distinct.size());
        parallel_for(base, hi, cfg_.threads, [&](std::size_t j) {
            balls_[j] = make_balls(s2_distinct[j]);
        });
        for (std::size_t j = base; j < hi; ++j) {
            if (balls_[j].out2.truncated || balls_[j].in2.truncated) cap_hit = true;
        }
    }
    dij_phase2 = dijkstra_invocations() - before;
    if (cap_hit) return false;

    for (std::size_t j = 0; j < balls_.size(); ++j) {
        const StoredBalls& b = balls_[j];
        const std::uint32_t s2 = s2_distinct[j];
        ball2_sizes.push_back(b.out2.members.size());
        ball2_sizes.push_back(b.in2.members.size());
        max_ball2 = std::max({max_ball2, b.out2.members.size(), b.in2.members.size()});
        // Shortest cycle through s2 inside the ball intersection.
        for (const auto& e : b.out2.members) {
            if (e.v == s2 || !b.in2.contains(e.v)) continue;
            const Dist value = sat_add(e.dist, b.in2.dist_of(e.v));
            if (reject_zero_candidates && value == 0) continue;
            if (value < walk_best_) {
                std::vector<std::uint32_t> walk = b.out2.path(e.v); // s2 .. u
                std::vector<std::uint32_t> back = b.in2.path(e.v);  // u .. s2
                walk.insert(walk.end(), back.begin() + 1, back.end());
                consider(value, GirthPhase::Phase2, std::move(walk));
            } else {
                consider(value, GirthPhase::Phase2, {});
            }
        }
    }
    est_phase2 = std::min(est_phase2, est_phase1);
    return true;
}

detail::i128 Girth4Run::underestimate2x(std::uint32_t u, std::uint32_t r2) const {
    const StoredBalls& b = balls_[slot2_at(r2)];
    if (b.in2.contains(u)) return 2 * static_cast<i128>(b.in2.dist_of(u));
    // min over r1 of 2 d(r1,r2) + d(u,r1) - d(r1,u); membership failed, so
    // some eliminator exists.
    if (r1_in[r2].empty()) throw std::logic_error("girth4: empty eliminator set in underestimate");
    i128 best = (static_cast<i128>(1) << 100);
    for (std::uint32_t r1 : r1_in[r2]) {
        const SourceDist& ar = s1_arrays_[s1_slot_[r1]];
        const i128 cand = 2 * detail::lift_signed(ar.out[r2]) + detail::lift_signed(ar.in[u]) -
                          detail::lift_signed(ar.out[u]);
        best = std::min(best, cand);
    }
    return best;
}

void Girth4Run::compute_eliminators_2() {
    const std::uint32_t n = g_.num_vertices();
    std::size_t pos = 0;
    std::vector<std::vector<std::uint32_t>> buckets(n), tsets(n);
    for (std::size_t iter = 0; iter < eliminator_iters; ++iter) {
        if (pos + per_iter_2_ > s2_stream.size())
            throw std::logic_error("girth4: phase-2 sample stream exhausted");
        const std::size_t lo = pos, hi = pos + per_iter_2_;
        pos = hi;
        for (std::uint32_t v = 0; v < n; ++v) buckets[v].clear();
        // Bucket samples by the vertices they consider close (their out4
        // members), so each v only tests relevant samples.
        for (std::size_t j = lo; j < hi; ++j) {
            const std::uint32_t s = s2_stream[j];
            for (std::uint32_t v : balls_[s2_slot_[s]].out4) buckets[v].push_back(s);
        }
        parallel_for(0, n, cfg_.threads, [&](std::size_t vi) {
            const auto v = static_cast<std::uint32_t>(vi);
            tsets[v].clear();
            for (std::uint32_t s : buckets[v]) {
                const StoredBalls& bs = balls_[s2_slot_[s]];
                bool pass = true;
                for (std::uint32_t t : r2_in[v]) {
                    const StoredBalls& bt = balls_[s2_slot_[t]];
                    if (!bt.out2.contains(s)) {
                        pass = false;
                        break;
                    }
                    const Dist d_sv = bs.out2.dist_of(v);
                    const Dist d_ts = bt.out2.dist_of(s);
                    const Dist d_tv = bt.out2.dist_of(v);
                    if (is_inf(d_tv)) throw std::logic_error("girth4: missing stored distance");
                    // doubled: 4 d(s,v) + 2 d(t,s) < 4 d(t,v) + 2 ud(s,t)
                    if (!(4 * static_cast<i128>(d_sv) + 2 * static_cast<i128>(d_ts) <
                          4 * static_cast<i128>(d_tv) + underestimate2x(s, t))) {
                        pass = false;
                        break;
                    }
                }
                if (pass) tsets[v].push_back(s);
            }
        });
        for (std::uint32_t v = 0; v < n; ++v) {
            if (tsets[v].empty()) continue;
            const std::uint32_t pick = tsets[v][rng_.below(tsets[v].size())];
            if (std::find(r2_in[v].begin(), r2_in[v].end(), pick) == r2_in[v].end())
                r2_in[v].push_back(pick);
        }
    }
}

bool Girth4Run::btilde_hook(std::uint32_t v, const std::vector<std::uint32_t>& r2s,
                            const std::vector<Dist>& d_r2_v, std::uint32_t s, Dist settled) const {
    // Condition 1: v still looks close to s under the 4-approximation rule,
    // with the in-traversal distance standing in for d(s,v).
    for (std::uint32_t r1 : r1_out[s]) {
        const SourceDist& ar = s1_arrays_[s1_slot_[r1]];
        if (!(4 * detail::lift(ar.in[s]) + detail::lift(ar.out[v]) >
              4 * detail::lift(settled) + 3 * detail::lift(ar.in[v])))
            return false;
    }
    for (std::size_t idx = 0; idx < r2s.size(); ++idx) {
        const std::uint32_t r2 = r2s[idx];
        const StoredBalls& br = balls_[s2_slot_[r2]];
        // Condition 2: s inside r2's out-ball (so d(r2,s) is stored).
        if (!br.out2.contains(s)) return false;
        // Condition 3, doubled: 4 D[s] + 2 d(r2,s) < 4 d(r2,v) + 2 ud(s,r2).
        if (!(4 * static_cast<i128>(settled) + 2 * static_cast<i128>(br.out2.dist_of(s)) <
              4 * static_cast<i128>(d_r2_v[idx]) + underestimate2x(s, r2)))
            return false;
    }
    return true;
}

BallSet Girth4Run::compute_btilde(std::uint32_t v) const {
    const std::vector<std::uint32_t>& r2s = r2_in[v];
    std::vector<Dist> d_r2_v(r2s.size());
    for (std::size_t i = 0; i < r2s.size(); ++i) {
        const StoredBalls& br = balls_[slot2_at(r2s[i])];
        d_r2_v[i] = br.out2.dist_of(v);
        if (is_inf(d_r2_v[i])) throw std::logic_error("girth4: missing stored distance for owner");
    }
    PrunedOptions popts;
    popts.max_members = cap_btilde_;
    popts.source_always_passes = true;
    return pruned_dijkstra(
        g_, v, Direction::In,
        [&](std::uint32_t s, Dist d) { return s == v ? true : btilde_hook(v, r2s, d_r2_v, s, d); },
        popts);
}

bool Girth4Run::phase3() {
    const std::uint32_t n = g_.num_vertices();
    const std::uint64_t before = dijkstra_invocations();

    struct Candidate {
        Dist value = kInf;
        std::vector<std::uint32_t> walk;
        std::size_t members = 0;
        bool truncated = false;
    };
    std::vector<Candidate> cands(n);
    parallel_for(0, n, cfg_.threads, [&](std::size_t vi) {
        const auto v = static_cast<std::uint32_t>(vi);
        BallSet ball = compute_btilde(v);
        cands[v].members = ball.members.size();
        cands[v].truncated = ball.truncated;
        if (ball.truncated) return;
        // Close cycles over out-edges of v whose head survived the pruning.
        Dist best = kInf;
        std::uint32_t best_u = kNoVertex;
        for (const Arc& a : g_.out(v)) {
            const Dist du = ball.dist_of(a.to);
            if (is_inf(du)) continue;
            const Dist value = sat_add(du, a.w);
            if (reject_zero_candidates && value == 0) continue;
            if (value < best) {
                best = value;
                best_u = a.to;
            }
        }
        if (best_u != kNoVertex) {
            cands[v].value = best;
            cands[v].walk = ball.path(best_u); // u .. v
            cands[v].walk.insert(cands[v].walk.begin(), v);
        }
    });
    dij_phase3 = dijkstra_invocations() - before;
    if (dij_phase3 != n) throw std::logic_error("girth4: phase-3 Dijkstra budget violated");

    bool cap_hit = false;
    for (std::uint32_t v = 0; v < n; ++v) {
        btilde_sizes.push_back(cands[v].members);
        max_btilde = std::max(max_btilde, cands[v].members);
        if (cands[v].truncated) cap_hit = true;
    }
    if (cap_hit) return false;
    for (std::uint32_t v = 0; v < n; ++v)
        if (!is_inf(cands[v].value)) consider(cands[v].value, GirthPhase::Phase3, std::move(cands[v].walk));
    est_phase3 = std::min(est_phase3, est_phase2);
    return true;
}

Girth4Run::Outcome Girth4Run::run() {
    draw_streams();
    phase1();
    if (s1_clamped) {
        // Full sampling: phase I already looked at the best cycle through
        // every vertex, the estimate is exact.
        est_phase2 = est_phase3 = est_phase1;
        return Outcome::Ok;
    }
    r1_out = compute_eliminators_1(Direction::Out);
    r1_in = compute_eliminators_1(Direction::In);
    if (!phase2()) return Outcome::BallCapExceeded;
    phase2_ran = true;
    if (s2_clamped) {
        // Full phase-II sampling already 2-approximates every cycle.
        est_phase3 = est_phase2;
        return Outcome::Ok;
    }
    compute_eliminators_2();
    if (!phase3()) return Outcome::BallCapExceeded;
    phase3_ran = true;
    return Outcome::Ok;
}

Girth4Output approx_girth_4(const WeightedDigraph& g, std::uint64_t seed, const Girth4Config& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    Girth4Output out;
    const std::uint64_t dij_before = dijkstra_invocations();

    // Zero-weight cycles are found exactly up front; afterwards every
    // genuine cycle is positive, which lets the regularized searches drop
    // zero-length candidates (always gadget-only artifacts).
    {
        std::vector<Edge> zeros;
        for (const Edge& e : g.edges())
            if (e.w == 0) zeros.push_back(e);
        if (!zeros.empty()) {
            WeightedDigraph zg = WeightedDigraph::from_edges(g.num_vertices(), std::move(zeros));
            SccDecomposition zscc = scc_decompose(zg);
            for (const Edge& e : zg.edges()) {
                if (zscc.comp[e.from] != zscc.comp[e.to]) continue;
                // Close the zero edge with a zero-weight path back.
                DistanceArray da = dijkstra(zg, e.to, Direction::Out);
                std::vector<std::uint32_t> walk;
                walk.push_back(e.from);
                auto back = extract_path(da, e.from); // e.to .. e.from
                walk.insert(walk.end(), back.begin(), back.end());
                out.estimate.value = 0;
                out.estimate.witness = std::move(walk);
                out.estimate.phase = GirthPhase::ZeroCycle;
                out.stats.zero_cycle_shortcut = true;
                out.stats.exact_path = true;
                out.stats.dijkstra_total = dijkstra_invocations() - dij_before;
                out.stats.ms_total =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return out;
            }
        }
    }

    SccDecomposition scc = scc_decompose(g);
    out.stats.scc_count = scc.count;
    out.stats.exact_path = true;
    std::vector<std::uint64_t> ball2_hist(24, 0), btilde_hist(24, 0);

    for (std::uint32_t c = 0; c < scc.count; ++c) {
        const auto& members = scc.members[c];
        if (members.size() < 2) continue;
        ++out.stats.nontrivial_sccs;
        WeightedDigraph sub = g.induced_subgraph(members);
        RegularizedGraph reg = regularize(sub);
        out.stats.regularized_vertices += reg.graph.num_vertices();
        out.stats.regularized_edges += reg.graph.num_edges();

        for (std::uint32_t attempt = 0;; ++attempt) {
            if (attempt > cfg.retry_limit)
                throw std::runtime_error("girth4: ball-size cap exceeded beyond the retry limit");
            Girth4Run run(reg.graph, cfg, Rng::mix(seed, Rng::mix(c, attempt)));
            run.reject_zero_candidates = true;
            const auto outcome = run.run();
            out.stats.dij_phase1 += run.dij_phase1;
            out.stats.dij_phase2 += run.dij_phase2;
            out.stats.dij_phase3 += run.dij_phase3;
            for (std::size_t s : run.ball2_sizes)
                ++ball2_hist[std::min(size_hist_bucket(s), ball2_hist.size() - 1)];
            for (std::size_t s : run.btilde_sizes)
                ++btilde_hist[std::min(size_hist_bucket(s), btilde_hist.size() - 1)];
            if (outcome == Girth4Run::Outcome::BallCapExceeded) {
                ++out.stats.retries;
                continue;
            }
            if (!run.s1_clamped) out.stats.exact_path = false;
            if (run.estimate() < out.estimate.value) {
                out.estimate.value = run.estimate();
                // Witness: regularized walk -> component-local -> input ids.
                std::vector<std::uint32_t> walk = map_walk_to_original(reg, run.witness);
                for (std::uint32_t& v : walk) v = members[v];
                out.estimate.witness = std::move(walk);
                out.estimate.phase = run.witness_phase;
            }
            break;
        }
    }

    out.stats.dijkstra_total = dijkstra_invocations() - dij_before;
    out.stats.ball2_hist = std::move(ball2_hist);
    out.stats.btilde_hist = std::move(btilde_hist);
    out.stats.ms_total =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace rtkit
