#pragma once

#include "singshadow/algebra.hpp"
#include "singshadow/shadow.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing_helpers {

using namespace singshadow;

inline ElementSet ids(const FiniteSingquandle & q, std::initializer_list<const char *> labels)
{
    ElementSet out;
    for (const char * l : labels)
        out.insert(q.find(l));
    return out;
}

inline ElementSet xids(const ShadowStructure & sh, std::initializer_list<const char *> labels)
{
    ElementSet out;
    for (const char * l : labels)
        out.insert(sh.find(l));
    return out;
}

inline ElementSet everything(std::size_t n)
{
    ElementSet out;
    for (ElementId i = 0; i < n; ++i)
        out.insert(i);
    return out;
}

inline std::vector<std::string> labels_of(const FiniteSingquandle & q, const ElementSet & s)
{
    std::vector<std::string> out;
    for (ElementId x : s)
        out.push_back(q.label(x));
    return out;
}

inline FiniteSingquandle trivial(std::size_t n)
{
    SingquandleTables t;
    t.name = "trivial" + std::to_string(n);
    t.star = OperationTable(n);
    t.r1 = OperationTable(n);
    t.r2 = OperationTable(n);
    for (std::size_t x = 0; x < n; ++x) {
        t.elements.push_back("e" + std::to_string(x));
        for (std::size_t y = 0; y < n; ++y) {
            t.star.at(x, y) = x;
            t.r1.at(x, y) = x;
            t.r2.at(x, y) = y;
        }
    }
    return FiniteSingquandle::from_tables(t);
}

// The Z4 example's tables typed in from the formulas x*y = 3x-2y, R1 = 2x+3y, R2 = x.
inline SingquandleTables z4_example_tables()
{
    const long long order[] = {1, 2, 3, 0};
    auto index = [](long long r) -> ElementId { return static_cast<ElementId>(((r % 4 + 4) % 4 + 3) % 4); };
    SingquandleTables t;
    t.name = "z4";
    t.elements = {"1", "2", "3", "0"};
    t.star = OperationTable(4);
    t.r1 = OperationTable(4);
    t.r2 = OperationTable(4);
    for (ElementId i = 0; i < 4; ++i)
        for (ElementId j = 0; j < 4; ++j) {
            long long x = order[i], y = order[j];
            t.star.at(i, j) = index(3 * x - 2 * y);
            t.r1.at(i, j) = index(2 * x + 3 * y);
            t.r2.at(i, j) = index(x);
        }
    return t;
}

} // namespace testing_helpers
