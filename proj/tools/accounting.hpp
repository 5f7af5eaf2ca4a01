#pragma once

// Global operator new/delete replacement that tracks live and peak heap bytes.
// Linked into the tools and test binaries that measure working space.

#include <cstddef>

namespace lyndon::accounting {

std::size_t live_bytes() noexcept;
std::size_t peak_bytes() noexcept;
/// Restarts peak tracking from the current live total.
void reset_peak() noexcept;

/// Peak bytes allocated on top of what was live when constructed.
class Scope {
public:
    Scope() noexcept : base_(live_bytes()) { reset_peak(); }
    std::size_t extra_peak() const noexcept { return peak_bytes() - base_; }

private:
    std::size_t base_;
};

} // namespace lyndon::accounting
