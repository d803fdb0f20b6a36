#pragma once

#include "reflexkit/catalog.hpp"
#include "reflexkit/classifier.hpp"
#include "reflexkit/enumerator.hpp"
#include "reflexkit/error.hpp"
#include "reflexkit/exact_core.hpp"
#include "reflexkit/fano.hpp"
#include "reflexkit/io.hpp"
#include "reflexkit/mori.hpp"
#include "reflexkit/parallel.hpp"
#include "reflexkit/polytope.hpp"
#include "reflexkit/reflexive.hpp"
