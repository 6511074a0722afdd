#pragma once

namespace made {

/// Flushes subnormal floats to zero while alive (x86 only; no-op elsewhere).
/// Restores the previous floating-point control state on destruction.
class DenormalGuard {
 public:
  DenormalGuard();
  ~DenormalGuard();
  DenormalGuard(const DenormalGuard&) = delete;
  DenormalGuard& operator=(const DenormalGuard&) = delete;

 private:
  unsigned int saved_ = 0;
};

/// Keeps freed tensor storage on the heap instead of returning it to the OS
/// between training steps. Idempotent.
void tune_allocator();

}  // namespace made
