// Copyright 2026 The Convoref Authors.
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

#include "convoref/nlp/types.h"

#include <cmath>
#include <string>

#include "convoref/common/error.h"

namespace convoref::nlp {

std::string_view TagName(Tag tag) {
  switch (tag) {
    case Tag::kNoun: return "NOUN";
    case Tag::kPropn: return "PROPN";
    case Tag::kVerb: return "VERB";
    case Tag::kAdj: return "ADJ";
    case Tag::kNum: return "NUM";
    case Tag::kDateWord: return "DATEWORD";
    case Tag::kStop: return "STOP";
    case Tag::kOther: return "OTHER";
  }
  return "OTHER";
}

std::string_view CategoryName(EntityCategory category) {
  switch (category) {
    case EntityCategory::kOrganization: return "organization";
    case EntityCategory::kLocation: return "location";
    case EntityCategory::kPerson: return "person";
    case EntityCategory::kDate: return "date";
    case EntityCategory::kNumeric: return "numeric";
    case EntityCategory::kGeneral: return "general";
  }
  return "general";
}

std::optional<EntityCategory> ParseCategory(std::string_view name) {
  for (EntityCategory c : kAllCategories) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

ColorCode ColorFor(EntityCategory category) {
  switch (category) {
    case EntityCategory::kPerson: return ColorCode::kRed;
    case EntityCategory::kLocation: return ColorCode::kBlue;
    case EntityCategory::kOrganization: return ColorCode::kPurple;
    case EntityCategory::kDate: return ColorCode::kGreen;
    case EntityCategory::kNumeric:
    case EntityCategory::kGeneral: return ColorCode::kNeutral;
  }
  return ColorCode::kNeutral;
}

std::string_view ColorName(ColorCode color) {
  switch (color) {
    case ColorCode::kRed: return "red";
    case ColorCode::kBlue: return "blue";
    case ColorCode::kPurple: return "purple";
    case ColorCode::kGreen: return "green";
    case ColorCode::kNeutral: return "neutral";
  }
  return "neutral";
}

void ExtractionParams::Validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw Error(ErrorCode::kConfigInvalid,
                "damping must be in (0,1), got " + std::to_string(damping));
  }
  if (window < 2) {
    throw Error(ErrorCode::kConfigInvalid,
                "window must be >= 2, got " + std::to_string(window));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kConfigInvalid, "epsilon must be positive");
  }
  if (max_iter < 1) {
    throw Error(ErrorCode::kConfigInvalid, "max_iter must be >= 1");
  }
}

}  // namespace convoref::nlp
