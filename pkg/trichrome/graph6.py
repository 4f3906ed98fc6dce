import bitarray
import bitarray.util

import trichrome.graph

HEADER = '>>graph6<<'

class Graph6Error(ValueError):
    def __init__(self, message, offset):
        super().__init__('graph6 parse error at byte {}: {}'.format(offset, message))
        self.offset = offset

def encode_size(n):
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return '~' + ''.join(chr(((n >> shift) & 0x3f) + 63) for shift in (12, 6, 0))
    raise trichrome.graph.CapacityError('graph6 size {} not supported'.format(n))

def _triangle(g):
    # column order: (0,1), (0,2), (1,2), (0,3), ...
    bits = bitarray.bitarray()
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    return bits

def write_graph6(g):
    bits = _triangle(g)
    bits.extend([0] * (-len(bits) % 6))
    body = ''.join(chr(bitarray.util.ba2int(bits[i:i + 6]) + 63) for i in range(0, len(bits), 6))
    return encode_size(g.n) + body

def _value(text, offset):
    c = ord(text[offset])
    if not 63 <= c <= 126:
        raise Graph6Error('byte {!r} outside 63..126'.format(text[offset]), offset)
    return c - 63

def parse_graph6(text):
    base = 0
    stripped = text.rstrip('\r\n')
    if stripped.startswith(HEADER):
        base = len(HEADER)
    if len(stripped) <= base:
        raise Graph6Error('missing size', base)

    offset = base
    if stripped[offset] == '~':
        if offset + 1 < len(stripped) and stripped[offset + 1] == '~':
            raise trichrome.graph.CapacityError('graph6 with 8-byte size header is beyond {} vertices'.format(trichrome.graph.MAX_VERTICES))
        if len(stripped) < offset + 4:
            raise Graph6Error('truncated size', len(stripped))
        n = 0
        for i in range(offset + 1, offset + 4):
            n = (n << 6) | _value(stripped, i)
        offset += 4
    else:
        n = _value(stripped, offset)
        offset += 1

    if n > trichrome.graph.MAX_VERTICES:
        raise trichrome.graph.CapacityError('graph6 has {} vertices, at most {} supported'.format(n, trichrome.graph.MAX_VERTICES))

    count = n * (n - 1) // 2
    expected = (count + 5) // 6
    body = stripped[offset:]
    if len(body) != expected:
        at = offset + min(len(body), expected)
        raise Graph6Error('expected {} data bytes for {} vertices, got {}'.format(expected, n, len(body)), at)

    bits = bitarray.bitarray()
    for i in range(len(body)):
        bits.extend(bitarray.util.int2ba(_value(stripped, offset + i), length=6))
    if bits[count:].any():
        raise Graph6Error('nonzero padding bits', offset + len(body) - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return trichrome.graph.Graph(n, tuple(rows))
