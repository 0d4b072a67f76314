#pragma once

// Counts global heap allocations while armed. Include from exactly one
// translation unit per binary: it replaces the global operator new.

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <new>

namespace kmismatch::testing {

inline std::atomic<bool> g_counting{false};
inline std::atomic<std::size_t> g_allocations{0};

class AllocationCounter {
public:
    AllocationCounter()
    {
        g_allocations = 0;
        g_counting = true;
    }
    ~AllocationCounter() { g_counting = false; }

    std::size_t count() const noexcept { return g_allocations.load(); }
};

inline void* counted_alloc(std::size_t size, std::size_t align = 0)
{
    if (g_counting.load(std::memory_order_relaxed))
        g_allocations.fetch_add(1, std::memory_order_relaxed);
    if (size == 0)
        size = 1;
    void* p = align > alignof(std::max_align_t) ? std::aligned_alloc(align, (size + align - 1) / align * align)
                                                : std::malloc(size);
    if (p == nullptr)
        throw std::bad_alloc();
    return p;
}

} // namespace kmismatch::testing

void* operator new(std::size_t size) { return kmismatch::testing::counted_alloc(size); }
void* operator new[](std::size_t size) { return kmismatch::testing::counted_alloc(size); }
void* operator new(std::size_t size, std::align_val_t align)
{
    return kmismatch::testing::counted_alloc(size, static_cast<std::size_t>(align));
}
void* operator new[](std::size_t size, std::align_val_t align)
{
    return kmismatch::testing::counted_alloc(size, static_cast<std::size_t>(align));
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete[](void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t) noexcept { std::free(p); }
void operator delete(void* p, std::align_val_t) noexcept { std::free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { std::free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { std::free(p); }
