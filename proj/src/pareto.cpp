#include "centdian/pareto.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace centdian {

namespace {

ServedVector served_for(const Instance& inst, const Subgraph& s,
                        const SolveOptions& opts) {
    return opts.access ? access_served_lengths(inst, s, *opts.access)
                       : served_lengths(inst, s);
}

bool weakly_leq(const ServedVector& a, const ServedVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool dominates_vector(const ServedVector& a, const ServedVector& b) {
    return weakly_leq(a, b) && a != b;
}

void insert_served_entry(std::vector<ServedParetoEntry>& archive,
                         const ServedVector& served,
                         std::vector<Subgraph> designs) {
    for (const ServedParetoEntry& e : archive)
        if (dominates_vector(e.served, served)) return;
    std::erase_if(archive, [&](const ServedParetoEntry& e) {
        return dominates_vector(served, e.served);
    });
    for (ServedParetoEntry& e : archive) {
        if (e.served == served) {
            e.designs.insert(e.designs.end(),
                             std::make_move_iterator(designs.begin()),
                             std::make_move_iterator(designs.end()));
            return;
        }
    }
    archive.push_back({served, std::move(designs)});
}

bool dominates_point(const Rat& w1, const Rat& m1, const Rat& w2,
                     const Rat& m2) {
    return w1 <= w2 && m1 <= m2 && (w1 < w2 || m1 < m2);
}

void insert_frontier_point(std::vector<FrontierPoint>& archive, const Rat& worst,
                           const Rat& mean, std::vector<Subgraph> designs) {
    for (const FrontierPoint& p : archive)
        if (dominates_point(p.worst, p.mean, worst, mean)) return;
    std::erase_if(archive, [&](const FrontierPoint& p) {
        return dominates_point(worst, mean, p.worst, p.mean);
    });
    for (FrontierPoint& p : archive) {
        if (p.worst == worst && p.mean == mean) {
            p.designs.insert(p.designs.end(),
                             std::make_move_iterator(designs.begin()),
                             std::make_move_iterator(designs.end()));
            return;
        }
    }
    archive.push_back({worst, mean, std::move(designs), std::nullopt});
}

}  // namespace

ServedParetoSet compute_po(const Instance& inst, const SolveOptions& opts) {
    inst.validate();
    if (opts.access) opts.access->validate();
    const size_t shard_slots = static_cast<size_t>(std::max(1, opts.workers));
    std::vector<std::vector<ServedParetoEntry>> local(shard_slots);

    ServedParetoSet result;
    result.candidates = for_each_feasible_sharded(
        inst, opts.cap, opts.force, opts.workers,
        [&](int shard, const Subgraph& s, const Rat&) {
            insert_served_entry(local[static_cast<size_t>(shard)],
                                served_for(inst, s, opts), {s});
        });

    // Shards only filtered internally; one more pass merges across them.
    std::vector<ServedParetoEntry> merged;
    for (std::vector<ServedParetoEntry>& shard_archive : local)
        for (ServedParetoEntry& e : shard_archive)
            insert_served_entry(merged, e.served, std::move(e.designs));

    for (ServedParetoEntry& e : merged)
        std::sort(e.designs.begin(), e.designs.end(), canonical_less);
    std::sort(merged.begin(), merged.end(),
              [](const ServedParetoEntry& a, const ServedParetoEntry& b) {
                  return canonical_less(a.designs.front(), b.designs.front());
              });
    result.entries = std::move(merged);
    return result;
}

ObjectiveFrontier compute_po2(const Instance& inst, const SolveOptions& opts) {
    inst.validate();
    if (opts.access) opts.access->validate();
    const size_t shard_slots = static_cast<size_t>(std::max(1, opts.workers));
    std::vector<std::vector<FrontierPoint>> local(shard_slots);

    ObjectiveFrontier result;
    result.candidates = for_each_feasible_sharded(
        inst, opts.cap, opts.force, opts.workers,
        [&](int shard, const Subgraph& s, const Rat&) {
            ObjectiveVector obj =
                objectives_from_served(inst, served_for(inst, s, opts));
            insert_frontier_point(local[static_cast<size_t>(shard)], obj.worst,
                                  obj.mean, {s});
        });

    std::vector<FrontierPoint> merged;
    for (std::vector<FrontierPoint>& shard_archive : local)
        for (FrontierPoint& p : shard_archive)
            insert_frontier_point(merged, p.worst, p.mean, std::move(p.designs));

    for (FrontierPoint& p : merged)
        std::sort(p.designs.begin(), p.designs.end(), canonical_less);
    std::sort(merged.begin(), merged.end(),
              [](const FrontierPoint& a, const FrontierPoint& b) {
                  return a.worst < b.worst;
              });
    result.points = std::move(merged);
    return result;
}

bool po2_subset_po(const Instance& inst, const SolveOptions& opts) {
    ServedParetoSet po = compute_po(inst, opts);
    ObjectiveFrontier front = compute_po2(inst, opts);
    for (const FrontierPoint& point : front.points) {
        for (const Subgraph& design : point.designs) {
            bool found = false;
            for (const ServedParetoEntry& entry : po.entries) {
                if (std::binary_search(entry.designs.begin(),
                                       entry.designs.end(), design,
                                       canonical_less)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

namespace {

/// Chebyshev value of a frontier point at lambda.
Rat cheb(const FrontierPoint& p, const Rat& lambda) {
    return Rat::max(lambda * p.worst, (Rat(1) - lambda) * p.mean);
}

/// Convex blend of a frontier point at lambda.
Rat blend(const FrontierPoint& p, const Rat& lambda) {
    return lambda * p.worst + (Rat(1) - lambda) * p.mean;
}

size_t winner_at(const std::vector<FrontierPoint>& points, const Rat& lambda) {
    size_t best = 0;
    for (size_t i = 1; i < points.size(); ++i) {
        Rat ci = cheb(points[i], lambda);
        Rat cb = cheb(points[best], lambda);
        if (ci < cb) {
            best = i;
            continue;
        }
        if (ci > cb) continue;
        Rat hi = blend(points[i], lambda);
        Rat hb = blend(points[best], lambda);
        if (hi < hb ||
            (hi == hb && canonical_less(points[i].designs.front(),
                                        points[best].designs.front())))
            best = i;
    }
    return best;
}

/// Exact lambda-interval of each frontier point, by sweeping the candidate
/// breakpoints where any two Chebyshev arms cross.  Between consecutive
/// candidates the winner is constant (every crossing of two piecewise arms
/// solves lambda*worst_i = (1-lambda)*mean_j, all of which are candidates),
/// so midpoint evaluation identifies each open segment's owner exactly.
void attach_intervals(ObjectiveFrontier& front) {
    std::vector<FrontierPoint>& points = front.points;
    if (points.empty()) return;
    if (points.size() == 1) {
        points[0].interval = LambdaInterval{Rat(0), Rat(1), false, false};
        return;
    }

    std::vector<Rat> cuts;
    for (const FrontierPoint& a : points) {
        for (const FrontierPoint& b : points) {
            Rat denom = a.worst + b.mean;
            if (denom.sign() == 0) continue;
            Rat lambda = b.mean / denom;  // solves lambda*worst_a = (1-lambda)*mean_b
            if (lambda.sign() > 0 && lambda < Rat(1)) cuts.push_back(lambda);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Owners of the open segments between cuts, and of the cuts themselves.
    struct Piece {
        Rat lo, hi;     // lo == hi for a breakpoint piece
        size_t owner;
    };
    std::vector<Piece> pieces;
    Rat prev(0);
    for (size_t i = 0; i <= cuts.size(); ++i) {
        Rat hi = i < cuts.size() ? cuts[i] : Rat(1);
        Rat mid = (prev + hi) / Rat(2);
        pieces.push_back({prev, hi, winner_at(points, mid)});
        if (i < cuts.size()) pieces.push_back({cuts[i], cuts[i], winner_at(points, cuts[i])});
        prev = hi;
    }

    // Merge adjacent pieces with one owner into maximal runs.
    struct Run {
        Rat lo, hi;
        bool lo_closed, hi_closed;
        size_t owner;
    };
    std::vector<Run> runs;
    for (const Piece& piece : pieces) {
        bool point_piece = piece.lo == piece.hi;
        if (!runs.empty() && runs.back().owner == piece.owner) {
            runs.back().hi = piece.hi;
            runs.back().hi_closed = point_piece;
            continue;
        }
        runs.push_back({piece.lo, piece.hi, point_piece, point_piece, piece.owner});
    }

    // Each frontier point must own exactly one run, and the runs must march
    // from the highest-worst point (small lambda) to the lowest-worst one.
    if (runs.size() != points.size())
        throw std::logic_error("lambda decomposition did not produce one "
                               "interval per frontier point");
    for (size_t i = 0; i < runs.size(); ++i) {
        size_t expected = points.size() - 1 - i;
        if (runs[i].owner != expected)
            throw std::logic_error("lambda intervals out of frontier order");
        points[expected].interval = LambdaInterval{
            runs[i].lo, runs[i].hi, runs[i].lo_closed, runs[i].hi_closed};
    }
}

}  // namespace

ObjectiveFrontier max_centdian_intervals(const Instance& inst,
                                         const SolveOptions& opts) {
    ObjectiveFrontier front = compute_po2(inst, opts);
    attach_intervals(front);
    return front;
}

std::string export_frontier(const Instance& inst, const SolveOptions& opts) {
    inst.validate();
    if (opts.access) opts.access->validate();

    using Point = std::pair<Rat, Rat>;
    const size_t shard_slots = static_cast<size_t>(std::max(1, opts.workers));
    std::vector<std::map<Point, std::vector<Subgraph>>> local(shard_slots);
    long long feasible = for_each_feasible_sharded(
        inst, opts.cap, opts.force, opts.workers,
        [&](int shard, const Subgraph& s, const Rat&) {
            ObjectiveVector obj =
                objectives_from_served(inst, served_for(inst, s, opts));
            local[static_cast<size_t>(shard)][{obj.worst, obj.mean}].push_back(s);
        });

    std::map<Point, std::vector<Subgraph>> all;
    for (std::map<Point, std::vector<Subgraph>>& shard_map : local)
        for (auto& [point, designs] : shard_map) {
            std::vector<Subgraph>& into = all[point];
            into.insert(into.end(), std::make_move_iterator(designs.begin()),
                        std::make_move_iterator(designs.end()));
        }
    for (auto& [point, designs] : all)
        std::sort(designs.begin(), designs.end(), canonical_less);

    ObjectiveFrontier front = max_centdian_intervals(inst, opts);
    auto frontier_point = [&](const Point& p) -> const FrontierPoint* {
        for (const FrontierPoint& fp : front.points)
            if (fp.worst == p.first && fp.mean == p.second) return &fp;
        return nullptr;
    };

    std::ostringstream out;
    out << "# feasible_designs=" << feasible << "\n";
    out << "# distinct_points=" << all.size() << "\n";
    out << "point_id,F_c_num,F_c_den,F_m_num,F_m_den,F_c_dec,F_m_dec,"
           "nondominated,lambda_lo,lambda_hi,representatives\n";
    size_t row = 0;
    for (const auto& [point, designs] : all) {
        const FrontierPoint* fp = frontier_point(point);
        out << row++ << ',' << point.first.num_str() << ','
            << point.first.den_str() << ',' << point.second.num_str() << ','
            << point.second.den_str() << ',' << point.first.decimal() << ','
            << point.second.decimal() << ',' << (fp ? 1 : 0) << ',';
        if (fp && fp->interval)
            out << fp->interval->lo.decimal() << ',' << fp->interval->hi.decimal();
        else
            out << ',';
        out << ',';
        for (size_t di = 0; di < designs.size(); ++di) {
            if (di) out << ';';
            const Subgraph& d = designs[di];
            if (d.empty()) {
                out << '-';
                continue;
            }
            for (size_t ei = 0; ei < d.size(); ++ei) {
                if (ei) out << '+';
                out << d[ei];
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace centdian
