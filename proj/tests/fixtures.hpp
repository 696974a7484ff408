#pragma once

#include "fles/event_structure.hpp"

namespace fixtures {

using fles::kBottom;
using fles::RawStructure;
using fles::StructurePtr;

/// ⊥ with concurrent e1:A and e2:B.
inline StructurePtr two_parallel() {
  RawStructure raw = RawStructure::with_bottom();
  raw.add_event("A", {kBottom});
  raw.add_event("B", {kBottom});
  return fles::EventStructure::create(raw);
}

/// e1:A < e2:B and e3:B < e4:A with e1 # e3.
inline StructurePtr two_branches() {
  RawStructure raw = RawStructure::with_bottom();
  const auto e1 = raw.add_event("A", {kBottom});
  raw.add_event("B", {e1});
  const auto e3 = raw.add_event("B", {kBottom});
  raw.add_event("A", {e3});
  raw.add_conflict(e1, e3);
  return fles::EventStructure::create(raw);
}

/// e1:A concurrent with e2:B < e3:A. Words ABA and BAA.
inline StructurePtr structure1() {
  RawStructure raw = RawStructure::with_bottom();
  raw.add_event("A", {kBottom});
  const auto e2 = raw.add_event("B", {kBottom});
  raw.add_event("A", {e2});
  return fles::EventStructure::create(raw);
}

/// e4:A < e5:B, with e6:A concurrent. Words ABA and AAB.
inline StructurePtr structure2() {
  RawStructure raw = RawStructure::with_bottom();
  const auto e4 = raw.add_event("A", {kBottom});
  raw.add_event("B", {e4});
  raw.add_event("A", {kBottom});
  return fles::EventStructure::create(raw);
}

/// Chain A < B < A.
inline StructurePtr structure3() {
  RawStructure raw = RawStructure::with_bottom();
  const auto a = raw.add_event("A", {kBottom});
  const auto b = raw.add_event("B", {a});
  raw.add_event("A", {b});
  return fles::EventStructure::create(raw);
}

}  // namespace fixtures
