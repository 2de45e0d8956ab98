#pragma once

#include "cfrp/engine.hpp"
#include "cfrp/patterns.hpp"

namespace cfrp {

// Deterministic heuristic executor for a target winning pattern. Always wins
// when it can; otherwise melds only when the meld does not push the hand
// further from the target, and discards to minimize remaining shanten.
// Tie chain for discards: acceptance count, then honors before characters,
// then lowest kind index.
ConcreteAction choose_action(const GameState& state, int player, AbstractAction pattern);

// Player that runs choose_action with a fixed target for the whole game.
PlayerCallbacks fixed_pattern_agent(AbstractAction pattern);

}  // namespace cfrp
