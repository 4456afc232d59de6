#include "autobasis/report.hpp"

#include "autobasis/error.hpp"

#include <sstream>

namespace autobasis {

KeyValueReport::KeyValueReport(std::string kind) {
    entries_.emplace_back("format", kReportFormat);
    entries_.emplace_back("report", std::move(kind));
}

KeyValueReport& KeyValueReport::add(const std::string& key, const std::string& value) {
    if (key.empty() || key.find(':') != std::string::npos || key.find('\n') != std::string::npos)
        throw PreconditionError("bad report key '" + key + "'");
    std::string flat = value;
    for (char& c : flat)
        if (c == '\n')
            c = ' ';
    entries_.emplace_back(key, std::move(flat));
    return *this;
}

KeyValueReport& KeyValueReport::add(const std::string& key, const char* value) {
    return add(key, std::string(value));
}

KeyValueReport& KeyValueReport::add(const std::string& key, bool value) {
    return add(key, std::string(value ? "true" : "false"));
}

KeyValueReport& KeyValueReport::add(const std::string& key, std::uint64_t value) {
    return add(key, std::to_string(value));
}

KeyValueReport& KeyValueReport::add(const std::string& key, const BigNat& value) {
    return add(key, value.str());
}

KeyValueReport& KeyValueReport::add(const std::string& key, const std::vector<BigNat>& values) {
    std::string text = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            text += ", ";
        text += values[i].str();
    }
    return add(key, text + "]");
}

std::string KeyValueReport::str() const {
    std::string out;
    for (const auto& [key, value] : entries_)
        out += key + ": " + value + "\n";
    return out;
}

std::string word_to_string(const Word& w) {
    if (w.empty())
        return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_report(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto colon = line.find(": ");
        if (colon == std::string::npos) {
            if (!line.empty() && line.back() == ':') {
                entries.emplace_back(line.substr(0, line.size() - 1), "");
                continue;
            }
            throw InputError("report line without 'key: value': " + line);
        }
        entries.emplace_back(line.substr(0, colon), line.substr(colon + 2));
    }
    return entries;
}

}  // namespace autobasis
