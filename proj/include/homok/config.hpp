#pragma once

namespace homok {

/// Extra self-checks (homogeneity of constructed tables, literal transfer
/// sums). Off by default; process-wide.
void set_debug_checks(bool enabled) noexcept;
bool debug_checks() noexcept;

}  // namespace homok
