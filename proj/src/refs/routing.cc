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

#include "convoref/refs/routing.h"

namespace convoref::refs {

std::vector<ReferenceKind> PlanReferences(nlp::EntityCategory category) {
  std::vector<ReferenceKind> kinds = {ReferenceKind::kImageSet,
                                      ReferenceKind::kSearchResults};
  switch (category) {
    case nlp::EntityCategory::kLocation:
      kinds.push_back(ReferenceKind::kMap);
      kinds.push_back(ReferenceKind::kWeather);
      break;
    case nlp::EntityCategory::kOrganization:
    case nlp::EntityCategory::kPerson:
      kinds.push_back(ReferenceKind::kWikiSnippet);
      break;
    case nlp::EntityCategory::kDate:
      kinds.push_back(ReferenceKind::kCalendar);
      break;
    case nlp::EntityCategory::kNumeric:
    case nlp::EntityCategory::kGeneral:
      break;
  }
  return kinds;
}

bool IsPrefetchKind(ReferenceKind kind) {
  return kind == ReferenceKind::kImageSet ||
         kind == ReferenceKind::kSearchResults;
}

}  // namespace convoref::refs
