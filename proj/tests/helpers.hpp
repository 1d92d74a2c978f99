#pragma once

#include "pbord/io.hpp"
#include "pbord/rules.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

namespace pbtest {

using namespace pbord;

inline ApprovalSet set_of(const Instance& instance, std::initializer_list<const char*> ids) {
    ApprovalSet set;
    for (const char* id : ids) set.push_back(instance.index_of(id));
    std::sort(set.begin(), set.end());
    return set;
}

inline std::vector<std::string> names_of(const Instance& instance, const ApprovalSet& set) {
    std::vector<std::string> names;
    for (std::uint32_t p : set) names.push_back(instance.id(p));
    return names;
}

// The walkthrough instances used across the test suites.

inline Instance layered_example() {
    return parse_instance(
        "pbinstance 1\n"
        "budget 5\n"
        "project a1 3\n"
        "project a2 3\n"
        "project a3 2\n"
        "project a4 2\n"
        "project a5 2\n"
        "project a6 2\n"
        "project a7 2\n"
        "project a8 2\n"
        "agent a1 > {a2,a3,a4} > a5 > {a6,a7} > a8\n"
        "agent {a1,a3} > {a4,a6} > a5 > {a2,a7} > a8\n");
}

inline Instance district_example() {
    std::string text =
        "pbinstance 1\n"
        "budget 100\n"
        "project A 10\n"
        "project B 90\n"
        "project C 30\n"
        "project D 30\n"
        "project E 30\n";
    for (int i = 0; i < 3; ++i) text += "agent A > B > {C,D} > E\n";
    for (int i = 0; i < 3; ++i) text += "agent A > C > {B,D} > E\n";
    return parse_instance(text);
}

inline Instance need_example() {
    return parse_instance(
        "pbinstance 1\n"
        "budget 12\n"
        "project a1 4\n"
        "project a2 2\n"
        "project a3 5\n"
        "project a4 3\n"
        "project a5 2\n"
        "agent a1 > {a2,a4} > a3 > a5\n"
        "agent {a3,a4} > a1 > a5 > a2\n");
}

} // namespace pbtest
