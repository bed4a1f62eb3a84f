#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Side { Cops, Robber };

/// Full game state: cop locations (by cop index; several cops may share a
/// vertex), robber location (unset before placement), side to move, round.
struct Position {
    std::vector<Vertex> cops;
    std::optional<Vertex> robber;
    Side to_move = Side::Cops;
    int round = 0;
};

struct RuleFlags {
    /// Modified game: every cop must move every turn (staying is illegal).
    bool force_cop_move = false;
    /// Placement order swap for area-defense experiments: the robber places
    /// first and the cop placement sees it.
    bool cops_place_after_robber = false;

    bool operator==(const RuleFlags&) const = default;
};

struct Outcome {
    enum class Kind { Caught, Evaded, IllegalMove };
    Kind kind = Kind::Evaded;
    int round = 0;                 // round of capture, or the cutoff
    Side half = Side::Cops;        // which half-move produced the capture
    int cop_index = -1;            // capturing cop, when kind == Caught
    std::string detail;            // diagnostic for IllegalMove
};

struct RoundMoves {
    std::vector<Vertex> cops;
    Vertex robber = -1;            // -1 when the game ended before the robber moved
};

/// Recorded playout. Every stored move has been validated by the engine.
struct Transcript {
    std::uint64_t graph_hash = 0;
    RuleFlags rules;
    std::uint64_t seed = 0;
    std::vector<Vertex> cop_placement;
    Vertex robber_placement = -1;
    std::vector<RoundMoves> rounds;
    Outcome outcome;
    std::vector<std::string> notes;  // strategy fallback flags etc.
};

/// Cop-side decision procedure with full position visibility. Strategies may
/// keep per-playout state; use one instance per game.
class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string name() const = 0;
    /// Initial placement of k cops. pos.robber is set only under
    /// rules.cops_place_after_robber.
    virtual std::vector<Vertex> place(const Graph& g, int k, const Position& pos) = 0;
    /// New position for every cop (stay = current vertex).
    virtual std::vector<Vertex> step(const Graph& g, const Position& pos) = 0;
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    virtual std::string name() const = 0;
    virtual Vertex place(const Graph& g, const Position& pos) = 0;
    virtual Vertex step(const Graph& g, const Position& pos) = 0;
    /// Optional flags to surface in the transcript (cleared on read).
    virtual std::vector<std::string> take_notes() { return {}; }
};

/// Options for a playout. max_rounds must be >= 1.
struct PlayOptions {
    long long max_rounds = 0;  // 0 = default n^3
    RuleFlags rules;
    std::uint64_t seed = 0;    // recorded in the transcript
};

/// Neighbors plus the current vertex of the mover.
std::vector<Vertex> legal_moves(const Graph& g, Vertex at);

/// Runs placements then rounds of (cops move, capture check, robber moves,
/// capture check). A strategy returning an illegal move aborts the playout
/// with Outcome::IllegalMove rather than throwing.
Transcript play(const Graph& g, CopStrategy& cops, int k, RobberStrategy& robber,
                const PlayOptions& options);

/// Re-simulates a transcript's recorded moves against the rules and returns
/// the outcome it reproduces. Throws std::invalid_argument if any recorded
/// move is illegal.
Outcome replay(const Graph& g, const Transcript& t);

std::string to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text);

}  // namespace pursuit
