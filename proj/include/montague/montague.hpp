// montague.hpp -- umbrella header for the whole pipeline.

#ifndef MONTAGUE_MONTAGUE_HPP
#define MONTAGUE_MONTAGUE_HPP

#include "montague/error.hpp"
#include "montague/grammar.hpp"
#include "montague/lexicon.hpp"
#include "montague/model.hpp"
#include "montague/reduce.hpp"
#include "montague/render.hpp"
#include "montague/semtype.hpp"
#include "montague/term.hpp"
#include "montague/term_io.hpp"
#include "montague/translate.hpp"
#include "montague/typed_tree.hpp"

#endif
