#pragma once

// Line-oriented automaton files.
//
//   # comment
//   base 2
//   states 3
//   initial 0
//   finals 0 2
//   direction msd        (optional; msd when omitted)
//   0 1 -> 2             (state digit -> state)
//
// Header lines come before transitions. Missing transitions go to an
// implicit dead state. Repeated (state, digit) pairs make the file
// nondeterministic; it is determinized on load. An msd file describes a
// machine reading the most significant digit first and is reversed into
// the LSD-first convention used everywhere else.

#include "autobasis/automaton.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace autobasis {

enum class Direction { Msd, Lsd };

struct ParsedAutomaton {
    Dfa machine;
    Direction direction = Direction::Msd;
    std::vector<std::string> warnings;
};

/// Throws ParseError with line and column on malformed input.
ParsedAutomaton parse_automaton_text(std::string_view text);
Dfa parse_automaton(std::string_view text);

/// Lsd output reproduces the machine exactly when parsed back; msd output
/// describes the reversed language and parses back to an equivalent machine.
std::string render_automaton(const Dfa& a, Direction direction = Direction::Lsd);

}  // namespace autobasis
