#pragma once

// Index bookkeeping for the (order, slot) pairs that label group factors
// and invariants through order 6.

#include <array>
#include <string>
#include <vector>

namespace vassiliev {

inline constexpr int kMaxOrder = 6;

/// Number of independent group factors at each order 0..6.
inline constexpr std::array<int, kMaxOrder + 1> kSlotCount = {1, 0, 1, 1, 3, 4, 9};

struct Slot {
    int order;
    int index;  ///< 1-based

    friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// A compound slot is a product of lower-order ones; the rest are primitive.
bool is_primitive(Slot s);
/// The factors of a compound slot, e.g. (6,3) -> {(2,1), (4,2)}.
std::vector<Slot> compound_factors(Slot s);

/// All slots of orders 2..max_order, in (order, index) order.
std::vector<Slot> all_slots(int max_order = kMaxOrder);
std::vector<Slot> primitive_slots(int max_order = kMaxOrder);

/// "2,1"
std::string slot_key(Slot s);

}  // namespace vassiliev
