// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#pragma once

// Everything except the command layer in harness.hpp, which pulls in JSON.

#include <scsr/aho_corasick.hpp>
#include <scsr/error.hpp>
#include <scsr/exact.hpp>
#include <scsr/greedy.hpp>
#include <scsr/instances.hpp>
#include <scsr/overlap_graph.hpp>
#include <scsr/preprocess.hpp>
#include <scsr/reduction.hpp>
#include <scsr/strings.hpp>
