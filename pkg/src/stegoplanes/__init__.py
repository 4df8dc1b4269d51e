"""Grayscale steganography over virtual bit-planes.

Pixel values are re-expressed in slow-growing 0/1-weight number systems
(Fibonacci p-sequences, primes) so that more bit-planes exist than the 8
physical ones, and high planes flip the pixel by far less than 2**plane.
"""

from .codec import (CapacityError, EmbedReport, HEADER_BITS, MalformedHeaderError,
                    MessageFrame, TruncatedMessageError, capacity, embed_bit,
                    embed_message, embeddable, extract_message)
from .imageio import GrayImage, PgmFormatError, read_pgm, synth_image, write_pgm
from .metrics import (GrowthRow, MetricsReport, alpha_root, distortion_report,
                      growth_table, mse, psnr, psnr_worst, wmse, wse)
from .numsys import (Codeword, NumberSystem, codebook, codeword_from_str,
                     codeword_to_str, compose, decompose, fibonacci_numbers,
                     from_weights, is_canonical, make_binary_system,
                     make_fibonacci_system, make_prime_system, prime_weights)

__version__ = "0.1.0"
