#ifndef JFRIEZE_JFRIEZE_HPP
#define JFRIEZE_JFRIEZE_HPP

#include "jfrieze/construct.hpp"
#include "jfrieze/frieze.hpp"
#include "jfrieze/json_io.hpp"
#include "jfrieze/juggling.hpp"
#include "jfrieze/matrix.hpp"
#include "jfrieze/rational.hpp"
#include "jfrieze/recurrence.hpp"
#include "jfrieze/render.hpp"
#include "jfrieze/sl2.hpp"

#endif
