// Copyright 2026 The Seq2Tree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQ2TREE_SEQ2TREE_H_
#define SEQ2TREE_SEQ2TREE_H_

#include "seq2tree/corpus.h"
#include "seq2tree/decoder.h"
#include "seq2tree/error.h"
#include "seq2tree/linearizer.h"
#include "seq2tree/metrics.h"
#include "seq2tree/scorer.h"
#include "seq2tree/scorers.h"
#include "seq2tree/taxonomy.h"
#include "seq2tree/token.h"

#endif  // SEQ2TREE_SEQ2TREE_H_
