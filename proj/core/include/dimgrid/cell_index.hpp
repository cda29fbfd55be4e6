#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dimgrid {

/**
 * Open-addressing hash set of integer cell coordinates.
 *
 * Keys are fixed-length integer vectors stored contiguously; each inserted key
 * gets a dense id in insertion order. Lookups take a span and never allocate,
 * which keeps the 3^n - 1 neighbor probes per cell cheap.
 */
class CellIndex {
public:
    static constexpr std::uint32_t npos = 0xFFFFFFFFu;

    explicit CellIndex(std::size_t dim, std::size_t expected_cells = 16);

    /// Returns the id of `key` and whether it was newly inserted.
    std::pair<std::uint32_t, bool> insert(std::span<const std::int64_t> key);

    /// Id of `key`, or npos when absent.
    [[nodiscard]] std::uint32_t find(std::span<const std::int64_t> key) const noexcept;

    [[nodiscard]] bool contains(std::span<const std::int64_t> key) const noexcept {
        return find(key) != npos;
    }

    [[nodiscard]] std::span<const std::int64_t> key(std::uint32_t id) const noexcept {
        return {keys_.data() + static_cast<std::size_t>(id) * dim_, dim_};
    }

    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    /// All keys, row-major, in insertion order.
    [[nodiscard]] const std::vector<std::int64_t>& keys() const noexcept { return keys_; }

    [[nodiscard]] static std::uint64_t hash(std::span<const std::int64_t> key) noexcept;

private:
    void grow();
    [[nodiscard]] bool equal(std::uint32_t id, std::span<const std::int64_t> key) const noexcept;

    std::size_t dim_;
    std::size_t count_ = 0;
    std::vector<std::int64_t> keys_;
    std::vector<std::uint32_t> slots_;
    std::size_t mask_ = 0;
};

}  // namespace dimgrid
