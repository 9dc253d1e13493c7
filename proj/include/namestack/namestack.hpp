// Convenience umbrella: the whole library.
#ifndef NAMESTACK_NAMESTACK_HPP
#define NAMESTACK_NAMESTACK_HPP

#include "namestack/bib.hpp"
#include "namestack/format.hpp"
#include "namestack/metrics.hpp"
#include "namestack/ratio.hpp"
#include "namestack/render.hpp"
#include "namestack/stack.hpp"
#include "namestack/unicode.hpp"

#endif
