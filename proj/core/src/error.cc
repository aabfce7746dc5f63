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

#include "seq2tree/error.h"

namespace seq2tree {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kUnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::kInconsistentLabelSet: return "INCONSISTENT_LABELSET";
    case ErrorCode::kEmptyLabelSet: return "EMPTY_LABELSET";
    case ErrorCode::kInvalidSequence: return "INVALID_SEQUENCE";
    case ErrorCode::kIllegalState: return "ILLEGAL_STATE";
    case ErrorCode::kIllegalToken: return "ILLEGAL_TOKEN";
    case ErrorCode::kInvalidScore: return "INVALID_SCORE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDecodeOverflow: return "DECODE_OVERFLOW";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kAlignmentError: return "ALIGNMENT_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace seq2tree
