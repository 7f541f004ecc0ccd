//! Relation files and exporters.
//!
//! File layout: magic `TORD`, version byte, level byte, order byte, tableau
//! count as little-endian `u32`, then the bit matrix row by row, each row
//! padded to a whole number of bytes (bit `b` of a row is bit `b % 8` of
//! byte `b / 8`).

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Level, OrderId, OrderRelation};
use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"TORD";
pub const VERSION: u8 = 1;

pub fn write_relation<W: Write>(mut w: W, rel: &OrderRelation) -> Result<()> {
    let size = rel.len();
    let n = u8::try_from(rel.n).map_err(|_| Error::Format(format!("level {} does not fit a byte", rel.n)))?;
    w.write_all(MAGIC)?;
    w.write_all(&[VERSION, n, rel.order.code()])?;
    w.write_all(&(size as u32).to_le_bytes())?;
    let row_bytes = size.div_ceil(8);
    let mut buf = vec![0u8; row_bytes];
    for a in 0..size {
        buf.iter_mut().for_each(|x| *x = 0);
        for b in rel.bits.row_iter(a) {
            buf[b / 8] |= 1 << (b % 8);
        }
        w.write_all(&buf)?;
    }
    Ok(())
}

pub fn read_relation<R: Read>(mut r: R) -> Result<OrderRelation> {
    let mut head = [0u8; 11];
    r.read_exact(&mut head).map_err(|e| Error::Format(format!("truncated header: {e}")))?;
    if &head[..4] != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    if head[4] != VERSION {
        return Err(Error::Format(format!("unsupported version {}", head[4])));
    }
    let n = head[5] as usize;
    let order = OrderId::from_code(head[6])?;
    let size = u32::from_le_bytes(head[7..11].try_into().unwrap()) as usize;
    let row_bytes = size.div_ceil(8);
    let mut buf = vec![0u8; row_bytes];
    let mut bits = BitMatrix::new(size);
    for a in 0..size {
        r.read_exact(&mut buf).map_err(|e| Error::Format(format!("truncated matrix: {e}")))?;
        for (k, &byte) in buf.iter().enumerate() {
            let mut x = byte;
            while x != 0 {
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                let b = k * 8 + t;
                if b >= size {
                    return Err(Error::Format("padding bits set".into()));
                }
                bits.set(a, b);
            }
        }
    }
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(Error::Format("trailing bytes".into()));
    }
    Ok(OrderRelation::new(n, order, bits))
}

pub fn write_relation_file(path: &Path, rel: &OrderRelation) -> Result<()> {
    // write to a sibling temp file first so readers never see half a matrix
    let tmp = path.with_extension("tord.tmp");
    {
        let f = std::fs::File::create(&tmp)?;
        let mut w = std::io::BufWriter::new(f);
        write_relation(&mut w, rel)?;
        w.flush()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_relation_file(path: &Path) -> Result<OrderRelation> {
    let f = std::fs::File::open(path)?;
    read_relation(std::io::BufReader::new(f))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub order: String,
    pub pairs: usize,
    pub covers: usize,
    pub strict_pairs: usize,
}

pub fn summary(rel: &OrderRelation) -> Summary {
    Summary {
        n: rel.n,
        order: rel.order.name().to_string(),
        pairs: rel.pair_count(),
        covers: rel.hasse_covers().pair_count(),
        strict_pairs: rel.strict_pair_count(),
    }
}

/// Hasse diagram in Graphviz syntax, edges pointing from smaller to larger.
pub fn to_dot(rel: &OrderRelation, level: &Level) -> String {
    let covers = rel.bits.hasse();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {}_{} {{", rel.order.name(), rel.n);
    let _ = writeln!(out, "  rankdir=BT;");
    for (k, t) in level.tableaux.iter().enumerate() {
        let _ = writeln!(out, "  t{k} [label=\"{t}\"];");
    }
    for (a, b) in covers.pairs() {
        let _ = writeln!(out, "  t{a} -> t{b};");
    }
    out.push_str("}\n");
    out
}

/// Strict pairs as `lower,upper` rows of tableau text forms, quoted.
pub fn to_csv(rel: &OrderRelation, level: &Level) -> String {
    let mut out = String::from("lower,upper\n");
    for (a, b) in rel.bits.pairs() {
        if a != b {
            let _ = writeln!(out, "\"{}\",\"{}\"", level.tableau(a), level.tableau(b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel_from(size: usize, pairs: &[(usize, usize)]) -> OrderRelation {
        let mut bits = BitMatrix::identity(size);
        for &(a, b) in pairs {
            bits.set(a % size, b % size);
        }
        OrderRelation::new(7, OrderId::VCh, bits)
    }

    proptest! {
        #[test]
        fn round_trip(size in 1usize..150, pairs in proptest::collection::vec((0usize..150, 0usize..150), 0..300)) {
            let rel = rel_from(size, &pairs);
            let mut buf = Vec::new();
            write_relation(&mut buf, &rel).unwrap();
            prop_assert_eq!(buf.len(), 11 + size * size.div_ceil(8));
            let back = read_relation(&buf[..]).unwrap();
            prop_assert_eq!(back, rel);
        }
    }

    #[test]
    fn rejects_corruption() {
        let rel = rel_from(10, &[(1, 2)]);
        let mut buf = Vec::new();
        write_relation(&mut buf, &rel).unwrap();
        assert_eq!(&buf[..4], b"TORD");
        assert_eq!(&buf[4..7], &[1, 7, 4]);
        assert_eq!(&buf[7..11], &10u32.to_le_bytes());
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(read_relation(&bad[..]).is_err());
        assert!(read_relation(&buf[..buf.len() - 1]).is_err());
        let mut long = buf.clone();
        long.push(0);
        assert!(read_relation(&long[..]).is_err());
        let mut pad = buf.clone();
        pad[11 + 1] |= 0x80; // bit 15 of row 0, beyond 10 columns
        assert!(read_relation(&pad[..]).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.tord");
        let rel = rel_from(70, &[(3, 69), (0, 64)]);
        write_relation_file(&path, &rel).unwrap();
        assert_eq!(read_relation_file(&path).unwrap(), rel);
    }
}
