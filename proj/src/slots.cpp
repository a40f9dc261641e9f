#include "vassiliev/slots.hpp"

#include <stdexcept>

namespace vassiliev {

std::vector<Slot> compound_factors(Slot s)
{
    switch (s.order * 10 + s.index) {
    case 41:
        return {{2, 1}, {2, 1}};
    case 51:
        return {{2, 1}, {3, 1}};
    case 61:
        return {{2, 1}, {2, 1}, {2, 1}};
    case 62:
        return {{3, 1}, {3, 1}};
    case 63:
        return {{2, 1}, {4, 2}};
    case 64:
        return {{2, 1}, {4, 3}};
    default:
        return {};
    }
}

bool is_primitive(Slot s)
{
    return compound_factors(s).empty();
}

std::vector<Slot> all_slots(int max_order)
{
    if (max_order > kMaxOrder)
        throw std::invalid_argument("slots are tabulated through order 6 only");
    std::vector<Slot> out;
    for (int i = 2; i <= max_order; ++i)
        for (int j = 1; j <= kSlotCount[i]; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Slot> primitive_slots(int max_order)
{
    std::vector<Slot> out;
    for (Slot s : all_slots(max_order))
        if (is_primitive(s))
            out.push_back(s);
    return out;
}

std::string slot_key(Slot s)
{
    return std::to_string(s.order) + "," + std::to_string(s.index);
}

}  // namespace vassiliev
