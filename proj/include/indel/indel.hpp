#ifndef INDEL_INDEL_HPP
#define INDEL_INDEL_HPP

#include "indel/balls.hpp"
#include "indel/bounds.hpp"
#include "indel/channels.hpp"
#include "indel/codefile.hpp"
#include "indel/rational.hpp"
#include "indel/vt.hpp"
#include "indel/word.hpp"

#endif
