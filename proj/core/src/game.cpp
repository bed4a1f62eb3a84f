#include "pursuit/game.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace pursuit {

using nlohmann::json;

std::vector<Vertex> legal_moves(const Graph& g, Vertex at) {
    g.check_vertex(at);
    auto nb = g.neighbors(at);
    std::vector<Vertex> moves(nb.begin(), nb.end());
    moves.push_back(at);
    std::sort(moves.begin(), moves.end());
    return moves;
}

namespace {

bool legal_step(const Graph& g, Vertex from, Vertex to, bool must_move) {
    if (to < 0 || to >= g.vertex_count()) return false;
    if (to == from) return !must_move;
    return g.has_edge(from, to);
}

std::optional<int> capturing_cop(const std::vector<Vertex>& cops, Vertex robber) {
    for (size_t i = 0; i < cops.size(); ++i)
        if (cops[i] == robber) return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace

Transcript play(const Graph& g, CopStrategy& cops, int k, RobberStrategy& robber,
                const PlayOptions& options) {
    if (k < 1) throw std::invalid_argument("need at least one cop");
    if (g.vertex_count() < 1) throw std::invalid_argument("empty graph");
    long long max_rounds = options.max_rounds;
    if (max_rounds == 0) {
        long long n = g.vertex_count();
        max_rounds = n * n * n;
    }
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");

    Transcript t;
    t.graph_hash = g.hash();
    t.rules = options.rules;
    t.seed = options.seed;

    auto illegal = [&](const std::string& detail, int round, Side half) {
        t.outcome = {Outcome::Kind::IllegalMove, round, half, -1, detail};
        return t;
    };

    Position pos;
    pos.round = 0;

    // Placement. Default order: cops first, then the robber with the cops in
    // view. The area-defense experiments swap this via rules.
    if (options.rules.cops_place_after_robber) {
        Vertex rv = robber.place(g, pos);
        if (rv < 0 || rv >= g.vertex_count())
            return illegal("robber placement out of range", 0, Side::Robber);
        pos.robber = rv;
        t.robber_placement = rv;
        pos.cops = cops.place(g, k, pos);
    } else {
        pos.cops = cops.place(g, k, pos);
        if (static_cast<int>(pos.cops.size()) == k &&
            std::all_of(pos.cops.begin(), pos.cops.end(),
                        [&](Vertex c) { return c >= 0 && c < g.vertex_count(); })) {
            Vertex rv = robber.place(g, pos);
            if (rv < 0 || rv >= g.vertex_count())
                return illegal("robber placement out of range", 0, Side::Robber);
            pos.robber = rv;
            t.robber_placement = rv;
        }
    }
    if (static_cast<int>(pos.cops.size()) != k)
        return illegal("cop placement returned wrong count", 0, Side::Cops);
    for (Vertex c : pos.cops)
        if (c < 0 || c >= g.vertex_count())
            return illegal("cop placement out of range", 0, Side::Cops);
    t.cop_placement = pos.cops;
    if (!pos.robber) return illegal("robber placement missing", 0, Side::Robber);

    for (auto& note : robber.take_notes()) t.notes.push_back(note);

    // Robber placed onto a cop: captured before any move.
    if (auto ci = capturing_cop(pos.cops, *pos.robber)) {
        t.outcome = {Outcome::Kind::Caught, 0, Side::Robber, *ci, ""};
        return t;
    }

    for (long long round = 1; round <= max_rounds; ++round) {
        pos.round = static_cast<int>(round);
        pos.to_move = Side::Cops;
        std::vector<Vertex> next = cops.step(g, pos);
        if (static_cast<int>(next.size()) != k)
            return illegal("cop strategy returned wrong move count", pos.round, Side::Cops);
        for (int i = 0; i < k; ++i)
            if (!legal_step(g, pos.cops[i], next[i], options.rules.force_cop_move))
                return illegal("cop " + std::to_string(i) + " illegal move " +
                                   std::to_string(pos.cops[i]) + "->" + std::to_string(next[i]),
                               pos.round, Side::Cops);
        pos.cops = next;
        t.rounds.push_back({pos.cops, -1});
        if (auto ci = capturing_cop(pos.cops, *pos.robber)) {
            t.outcome = {Outcome::Kind::Caught, pos.round, Side::Cops, *ci, ""};
            return t;
        }

        pos.to_move = Side::Robber;
        Vertex rnext = robber.step(g, pos);
        for (auto& note : robber.take_notes()) t.notes.push_back(note);
        if (!legal_step(g, *pos.robber, rnext, false))
            return illegal("robber illegal move " + std::to_string(*pos.robber) + "->" +
                               std::to_string(rnext),
                           pos.round, Side::Robber);
        pos.robber = rnext;
        t.rounds.back().robber = rnext;
        if (auto ci = capturing_cop(pos.cops, *pos.robber)) {
            t.outcome = {Outcome::Kind::Caught, pos.round, Side::Robber, *ci, ""};
            return t;
        }
    }
    t.outcome = {Outcome::Kind::Evaded, static_cast<int>(max_rounds), Side::Robber, -1, ""};
    return t;
}

Outcome replay(const Graph& g, const Transcript& t) {
    std::vector<Vertex> cops = t.cop_placement;
    Vertex robber = t.robber_placement;
    for (Vertex c : cops) g.check_vertex(c);
    g.check_vertex(robber);
    if (auto ci = capturing_cop(cops, robber))
        return {Outcome::Kind::Caught, 0, Side::Robber, *ci, ""};
    int round = 0;
    for (const auto& moves : t.rounds) {
        ++round;
        if (moves.cops.size() != cops.size())
            throw std::invalid_argument("transcript: wrong cop count in round");
        for (size_t i = 0; i < cops.size(); ++i) {
            if (!legal_step(g, cops[i], moves.cops[i], t.rules.force_cop_move))
                throw std::invalid_argument("transcript: illegal cop move");
            cops[i] = moves.cops[i];
        }
        if (auto ci = capturing_cop(cops, robber))
            return {Outcome::Kind::Caught, round, Side::Cops, *ci, ""};
        if (moves.robber < 0) throw std::invalid_argument("transcript: missing robber move");
        if (!legal_step(g, robber, moves.robber, false))
            throw std::invalid_argument("transcript: illegal robber move");
        robber = moves.robber;
        if (auto ci = capturing_cop(cops, robber))
            return {Outcome::Kind::Caught, round, Side::Robber, *ci, ""};
    }
    return {Outcome::Kind::Evaded, round, Side::Robber, -1, ""};
}

namespace {

std::string outcome_kind_name(Outcome::Kind k) {
    switch (k) {
        case Outcome::Kind::Caught: return "caught";
        case Outcome::Kind::Evaded: return "evaded";
        case Outcome::Kind::IllegalMove: return "illegal_move";
    }
    return "?";
}

Outcome::Kind outcome_kind_from(const std::string& s) {
    if (s == "caught") return Outcome::Kind::Caught;
    if (s == "evaded") return Outcome::Kind::Evaded;
    if (s == "illegal_move") return Outcome::Kind::IllegalMove;
    throw std::invalid_argument("unknown outcome kind '" + s + "'");
}

}  // namespace

std::string to_json(const Transcript& t) {
    json j;
    j["graph_hash"] = t.graph_hash;
    j["seed"] = t.seed;
    j["rule_flags"] = {{"force_cop_move", t.rules.force_cop_move},
                       {"cops_place_after_robber", t.rules.cops_place_after_robber}};
    j["placements"] = {{"cops", t.cop_placement}, {"robber", t.robber_placement}};
    json rounds = json::array();
    for (const auto& r : t.rounds) rounds.push_back({{"cops", r.cops}, {"robber", r.robber}});
    j["moves"] = rounds;
    j["outcome"] = {{"kind", outcome_kind_name(t.outcome.kind)},
                    {"round", t.outcome.round},
                    {"half", t.outcome.half == Side::Cops ? "cops" : "robber"},
                    {"cop_index", t.outcome.cop_index},
                    {"detail", t.outcome.detail}};
    j["notes"] = t.notes;
    return j.dump(2);
}

Transcript transcript_from_json(const std::string& text) {
    json j = json::parse(text);
    Transcript t;
    t.graph_hash = j.at("graph_hash").get<std::uint64_t>();
    t.seed = j.at("seed").get<std::uint64_t>();
    t.rules.force_cop_move = j.at("rule_flags").at("force_cop_move").get<bool>();
    t.rules.cops_place_after_robber = j.at("rule_flags").at("cops_place_after_robber").get<bool>();
    t.cop_placement = j.at("placements").at("cops").get<std::vector<Vertex>>();
    t.robber_placement = j.at("placements").at("robber").get<Vertex>();
    for (const auto& r : j.at("moves")) {
        RoundMoves moves;
        moves.cops = r.at("cops").get<std::vector<Vertex>>();
        moves.robber = r.at("robber").get<Vertex>();
        t.rounds.push_back(std::move(moves));
    }
    t.outcome.kind = outcome_kind_from(j.at("outcome").at("kind").get<std::string>());
    t.outcome.round = j.at("outcome").at("round").get<int>();
    t.outcome.half = j.at("outcome").at("half").get<std::string>() == "cops" ? Side::Cops : Side::Robber;
    t.outcome.cop_index = j.at("outcome").at("cop_index").get<int>();
    t.outcome.detail = j.at("outcome").at("detail").get<std::string>();
    t.notes = j.at("notes").get<std::vector<std::string>>();
    return t;
}

}  // namespace pursuit
