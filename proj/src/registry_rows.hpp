// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

#include <vector>

#include "dblgamma/verify.hpp"

namespace dblgamma::detail {

/// The identity rows behind Registry::builtin(), in no particular order.
std::vector<IdentityCheck> builtin_rows();

}  // namespace dblgamma::detail
