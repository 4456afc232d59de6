#pragma once

// Flat "key: value" documents. The first two lines are always
//   format: autobasis-report/1
//   report: <kind>
// followed by keys in insertion order. Lists render as [a, b, c].

#include "autobasis/automaton.hpp"
#include "autobasis/bignum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace autobasis {

inline constexpr const char* kReportFormat = "autobasis-report/1";

class KeyValueReport {
public:
    explicit KeyValueReport(std::string kind);

    KeyValueReport& add(const std::string& key, const std::string& value);
    KeyValueReport& add(const std::string& key, const char* value);
    KeyValueReport& add(const std::string& key, bool value);
    KeyValueReport& add(const std::string& key, std::uint64_t value);
    KeyValueReport& add(const std::string& key, const BigNat& value);
    KeyValueReport& add(const std::string& key, const std::vector<BigNat>& values);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Digits joined by spaces, or "(empty)".
std::string word_to_string(const Word& w);

/// Parses a document produced by str(); throws InputError on bad lines.
std::vector<std::pair<std::string, std::string>> parse_report(const std::string& text);

}  // namespace autobasis
