#pragma once

#include "bcalc/procedures/procedures.hpp"

namespace bcalc::detail {

/// Root ideal carried to chart `id`: substitution image plus chart relations.
Ideal pull_to_chart(const BlowUpSequence& seq, const std::string& id, const Ideal& root_ideal);

/// Every component of the center is a regular scheme.
bool center_regular(const Center& center);

/// V(center) lies inside V(J).
bool center_over(const Center& center, const Ideal& J);

/// Flags for center regularity and support over `support_root` (an ideal on the root chart).
Flag centers_regular_flag(const BlowUpSequence& seq);
Flag centers_over_flag(const BlowUpSequence& seq, const Ideal& support_root, const std::string& name);
Flag normal_form_flag(const BlowUpSequence& seq);

Flag make_flag(std::string name, bool value, std::string detail = "");

}  // namespace bcalc::detail

namespace bcalc::detail {
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);
}
