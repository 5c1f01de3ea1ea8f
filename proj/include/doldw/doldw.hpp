// doldw.hpp -- umbrella include for the whole library.

#pragma once

#include "space.hpp"
#include "gf2.hpp"
#include "steenrod.hpp"
#include "knowledge.hpp"
#include "obstruction.hpp"
#include "classifier.hpp"
#include "format.hpp"
