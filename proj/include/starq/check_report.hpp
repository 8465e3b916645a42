#ifndef STARQ_CHECK_REPORT_HPP
#define STARQ_CHECK_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace starq
{

struct CheckEntry {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Ordered list of named pass/fail results. Failures are data, not exceptions.
struct CheckReport {
    std::vector<CheckEntry> entries;

    void add(std::string name, bool passed, std::string detail = {})
    {
        entries.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const CheckReport &other)
    {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
    bool passed() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const CheckEntry &e) { return e.passed; });
    }
    const CheckEntry *first_failure() const
    {
        auto it = std::find_if(entries.begin(), entries.end(), [](const CheckEntry &e) { return !e.passed; });
        return it == entries.end() ? nullptr : &*it;
    }
};

} // namespace starq

#endif
