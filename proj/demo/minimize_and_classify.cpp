/* facecover: DNF minimization and lower-bound auditing for few-zero Boolean functions
 * Copyright (C) 2026  the facecover authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/* Reads a zero matrix, prints a minimal-rank DNF and the class counts of its terms.

     minimize_and_classify demo/data/phi_4_5_2.txt
*/

#include <iostream>

#include <facecover/facecover.hpp>

int main( int argc, char** argv )
{
  using namespace facecover;
  if ( argc != 2 )
  {
    std::cerr << "usage: " << argv[0] << " MATRIX_FILE\n";
    return 1;
  }
  try
  {
    auto const f = parse_matrix_file( argv[1] );
    auto const c = classify_matrix( f );
    std::cout << "n=" << f.n() << " k=" << f.k() << " reduced=" << c.is_reduced << " adjacent_zeros=" << c.has_adjacent_zeros
              << " min_column_weight=" << c.min_column_weight << '\n';

    auto const r = minimal_dnf( f, objective::rank );
    std::cout << "rank " << r.optimum << ( r.proved_optimal ? " (optimal)" : " (best found)" ) << '\n';
    for ( auto const& term : r.formula )
    {
      std::cout << "  " << term.to_string() << '\n';
    }

    auto const cls = classify_conjunctions( f, r.formula, classification_mode::report );
    std::cout << "mu =";
    for ( auto m : cls.mu )
    {
      std::cout << ' ' << m;
    }
    std::cout << ", unclassified " << cls.unclassified_count << '\n';
  }
  catch ( error const& e )
  {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
