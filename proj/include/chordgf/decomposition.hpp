#pragma once

#include <optional>
#include <vector>

#include "chordgf/chord_diagram.hpp"

namespace chordgf {

enum class DecompositionCase {
  SingleChord,  // the one-chord diagram, left as is
  RootFree,     // root endpoint lies in no reason for connectivity-1
  RootCovered,  // root endpoint lies in a reason; that reason is split off first
};

const char* to_string(DecompositionCase c);

/// Canonical split of a connected diagram into a 2-connected core with a
/// connected diagram attached at every core endpoint.
///
/// For a core endpoint e of core chord c, the material cut away around e
/// (L to its left, R to its right in the original order) together with c
/// forms a connected diagram. It is stored rooted at e, read cyclically:
/// e, R, the other end of c, L. A single chord means nothing is attached.
///
/// In the RootCovered case, `root_block` holds the maximal reason S at the
/// root together with its cut chord c*, in original order (S followed by
/// the far end of c*); c* is the chord on its last position and becomes the
/// root chord of the remaining root-free diagram.
struct Decomposition {
  DecompositionCase kind = DecompositionCase::SingleChord;
  ChordDiagram core;
  std::vector<ChordDiagram> attachments;  // one per core position
  std::optional<ChordDiagram> root_block;

  /// Total chord count of the diagram this decomposes.
  int chords() const;
};

/// Runs the left-to-right maximal-reason removal. Throws PreconditionError
/// if d is empty or not connected.
Decomposition decompose_connected(const ChordDiagram& d);

/// Inverse of decompose_connected. Throws PreconditionError on malformed
/// data (attachment count mismatch, disconnected attachments or root block,
/// root block with fewer than two chords).
ChordDiagram recompose(const Decomposition& dec);

}  // namespace chordgf
