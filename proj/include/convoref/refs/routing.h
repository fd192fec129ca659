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

#ifndef CONVOREF_REFS_ROUTING_H_
#define CONVOREF_REFS_ROUTING_H_

#include <vector>

#include "convoref/nlp/types.h"
#include "convoref/refs/reference.h"

namespace convoref::refs {

// Reference kinds for a category, most visual first. Every category gets
// [image_set, search_results]; locations add [map, weather]; organizations
// and people add [wiki_snippet]; dates add [calendar].
std::vector<ReferenceKind> PlanReferences(nlp::EntityCategory category);

// Kinds fetched in the background as soon as a keyword is broadcast; all
// others are fetched when selected.
bool IsPrefetchKind(ReferenceKind kind);

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_ROUTING_H_
