#pragma once

// Named example sets, each returned as a minimal canonical machine.
//
//   cantor3         base 3, digits in {0, 2}
//   evil2           base 2, even number of 1 digits
//   rudinshapiro2   base 2, odd number of "11" blocks
//   digits01base4   base 4, digits in {0, 1}
//   digits02base4   base 4, digits in {0, 2}
//   hard(k,m)       base k, digit count congruent to -1 mod m

#include "autobasis/automaton.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace autobasis {

struct CorpusEntry {
    std::string name;
    std::string description;
    Dfa machine;
};

/// Fixed names plus the "hard(k,m)" template.
std::vector<std::string> corpus_names();

/// Throws InputError for an unknown name.
CorpusEntry corpus_entry(std::string_view name);

}  // namespace autobasis
