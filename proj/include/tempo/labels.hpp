#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

using LabelId = std::uint32_t;
using ClassId = std::uint32_t;

inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();
inline constexpr ClassId kNoClass = std::numeric_limits<ClassId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// One label represents a class of (s,v)-walks sharing starting time, arrival
// and cost. The initial label (at the source, no predecessor, no edge) is the
// only one with `pred == kNoLabel`.
struct Label {
    LabelId id = kNoLabel;
    VertexId vertex = 0;
    Time start = 0;    // starting time of the represented walks
    Time arrival = 0;  // arrival time at `vertex`
    Rational cost;
    LabelId pred = kNoLabel;   // label this one was pushed from
    EdgeId edge = kNoEdge;     // edge whose traversal created it
    Time prev_edge_time = 0;   // availability time of that edge
    ClassId cls = kNoClass;    // owning equivalence class, once inserted

    bool is_initial() const { return pred == kNoLabel; }
    Time duration() const { return arrival - start; }
};

namespace detail {
inline void require_same_vertex(const Label& l1, const Label& l2) {
    if (l1.vertex != l2.vertex) throw Error("label relation across different vertices");
}
}  // namespace detail

// Same starting time and cost: the two labels head interchangeable classes.
inline bool equivalent(const Label& l1, const Label& l2) {
    detail::require_same_vertex(l1, l2);
    return l1.start == l2.start && l1.cost == l2.cost;
}

// l1 starts no earlier, arrives no later and costs no more than l2, and the
// two are not equivalent (which forces one strict inequality): anything l2
// could complete to, l1 completes at least as well, so l2 cannot prefix an
// efficient path and may be pruned.
inline bool predominates(const Label& l1, const Label& l2) {
    detail::require_same_vertex(l1, l2);
    if (equivalent(l1, l2)) return false;
    return l1.start >= l2.start && l1.arrival <= l2.arrival && l1.cost <= l2.cost;
}

// Pareto order on (duration, cost); decides efficiency among finished labels.
inline bool dominates(const Label& l1, const Label& l2) {
    detail::require_same_vertex(l1, l2);
    const Time d1 = l1.duration();
    const Time d2 = l2.duration();
    return d1 <= d2 && l1.cost <= l2.cost && (d1 < d2 || l1.cost < l2.cost);
}

// Labels equivalent to the representative, members in insertion order. The
// representative is a member with minimum arrival time.
struct EquivClass {
    LabelId representative = kNoLabel;
    std::vector<LabelId> members;
    bool alive = true;
};

// Owns every label and class of one enumeration run. Labels are never
// destroyed: Phase 2 backtracks through predecessor ids, so identities stay
// stable even after a class is pruned. Total label count is bounded by the
// per-edge candidate limits (at most S per edge plus the initial label).
class LabelArena {
public:
    const Label& label(LabelId id) const { return labels_[id]; }
    Label& label(LabelId id) { return labels_[id]; }
    std::size_t labels_created() const { return labels_.size(); }

    const EquivClass& cls(ClassId id) const { return classes_[id]; }
    EquivClass& cls(ClassId id) { return classes_[id]; }

    LabelId make_initial(VertexId source) {
        Label l;
        l.id = static_cast<LabelId>(labels_.size());
        l.vertex = source;
        l.cost = 0;
        labels_.push_back(std::move(l));
        return labels_.back().id;
    }

    // Extends `from` over `e`. With `restart` the new label begins a fresh
    // walk at e.t (edges leaving the source under the duration objective).
    LabelId push(LabelId from, const TemporalEdge& e, bool restart) {
        const Label& src = label(from);
        if (src.vertex != e.src) throw Error("push: label does not sit at the edge tail");
        if (src.arrival > e.t)
            throw Error("push: label arrives at " + std::to_string(src.arrival) +
                        " after the edge departs at " + std::to_string(e.t));
        Label l;
        l.id = static_cast<LabelId>(labels_.size());
        l.vertex = e.dst;
        l.pred = from;
        l.edge = e.id;
        l.prev_edge_time = e.t;
        l.arrival = e.arrival();
        if (restart) {
            l.start = e.t;
            l.cost = e.cost;
        } else {
            l.start = src.start;
            l.cost = src.cost + e.cost;
        }
        labels_.push_back(std::move(l));
        return labels_.back().id;
    }

    ClassId make_class(LabelId representative) {
        EquivClass c;
        c.representative = representative;
        c.members.push_back(representative);
        classes_.push_back(std::move(c));
        return static_cast<ClassId>(classes_.size() - 1);
    }

    void kill_class(ClassId id) { classes_[id].alive = false; }

private:
    std::vector<Label> labels_;
    std::vector<EquivClass> classes_;
};

enum class InsertOutcome { NewRepresentative, Merged, Discarded };

// The mutually non-predominated class representatives kept at one vertex,
// in insertion order.
class RepSet {
public:
    explicit RepSet(VertexId vertex = 0) : vertex_(vertex) {}

    VertexId vertex() const { return vertex_; }
    std::span<const LabelId> representatives() const { return reps_; }

    // Three-way case split against the current representatives: the new
    // label removes every representative it predominates (class and all),
    // merges into an equivalent class (taking over as representative when
    // strictly earlier), or is discarded when predominated itself. Otherwise
    // it founds a new class.
    InsertOutcome insert_with_pruning(LabelArena& arena, LabelId id) {
        Label& incoming = arena.label(id);
        if (incoming.vertex != vertex_)
            throw Error("insert into the representative set of a different vertex");
        for (std::size_t i = 0; i < reps_.size();) {
            const Label& rep = arena.label(reps_[i]);
            if (predominates(incoming, rep)) {
                arena.kill_class(rep.cls);
                reps_.erase(reps_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            if (equivalent(incoming, rep)) {
                EquivClass& c = arena.cls(rep.cls);
                c.members.push_back(id);
                incoming.cls = rep.cls;
                if (incoming.arrival < rep.arrival) {
                    c.representative = id;
                    reps_[i] = id;
                    // The earlier arrival may predominate representatives the
                    // old one could not; keep the set mutually
                    // non-predominated.
                    for (std::size_t j = i + 1; j < reps_.size();) {
                        const Label& later = arena.label(reps_[j]);
                        if (predominates(incoming, later)) {
                            arena.kill_class(later.cls);
                            reps_.erase(reps_.begin() + static_cast<std::ptrdiff_t>(j));
                        } else {
                            ++j;
                        }
                    }
                }
                return InsertOutcome::Merged;
            }
            if (predominates(rep, incoming)) {
                return InsertOutcome::Discarded;
            }
            ++i;
        }
        incoming.cls = arena.make_class(id);
        reps_.push_back(id);
        return InsertOutcome::NewRepresentative;
    }

private:
    VertexId vertex_;
    std::vector<LabelId> reps_;
};

// Debug dump: one line per representative, `v: (b,a,c) [(b,a,c), ...]` with
// class members in insertion order.
inline void dump_representatives(std::ostream& out, const TemporalGraph& g,
                                 const LabelArena& arena, const RepSet& reps) {
    auto triple = [&](const Label& l) {
        return "(" + std::to_string(l.start) + "," + std::to_string(l.arrival) + "," +
               format_rational(l.cost) + ")";
    };
    for (LabelId id : reps.representatives()) {
        const Label& rep = arena.label(id);
        out << g.vertex_name(reps.vertex()) << ": " << triple(rep) << " [";
        const EquivClass& c = arena.cls(rep.cls);
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            if (i > 0) out << ", ";
            out << triple(arena.label(c.members[i]));
        }
        out << "]\n";
    }
}

}  // namespace tempo
