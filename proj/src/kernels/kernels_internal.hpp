#pragma once

#include "symtangle/kernels.hpp"

namespace symtangle::detail {

extern const KernelTable kScalarTable;

// Null when the compiler cannot target AVX2.
const KernelTable *avx2_table();

}  // namespace symtangle::detail
