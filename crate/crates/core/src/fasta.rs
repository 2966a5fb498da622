//! FASTA and TSV input/output.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::genmodel::PlantedSequence;
use crate::pipeline::Region;
use crate::seq::{Alphabet, SymbolString};

/// Column width used when writing sequences.
pub const LINE_WIDTH: usize = 70;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    /// First whitespace-separated token of the header line.
    pub id: String,
    pub seq: SymbolString,
}

impl FastaRecord {
    pub fn new(id: impl Into<String>, seq: SymbolString) -> Self {
        Self { id: id.into(), seq }
    }
}

pub fn read_fasta(path: impl AsRef<Path>, alphabet: &Alphabet) -> Result<Vec<FastaRecord>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_fasta(&text, alphabet, &path.display().to_string())
}

/// Parses FASTA text; `source` names the input in error locations.
///
/// Symbols are matched case-insensitively, line wrapping is free and blank
/// lines are ignored. Every record must have a non-empty id and sequence.
pub fn parse_fasta(text: &str, alphabet: &Alphabet, source: &str) -> Result<Vec<FastaRecord>> {
    let mut records: Vec<FastaRecord> = Vec::new();
    let mut current: Option<(String, usize, Vec<u8>)> = None;

    let close = |rec: Option<(String, usize, Vec<u8>)>, out: &mut Vec<FastaRecord>| -> Result<()> {
        if let Some((id, line, seq)) = rec {
            if seq.is_empty() {
                return Err(Error::parse(
                    format!("{source}:{line}"),
                    format!("record '{id}' has no sequence"),
                ));
            }
            out.push(FastaRecord::new(id, SymbolString::new(seq)));
        }
        Ok(())
    };

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            close(current.take(), &mut records)?;
            let id = header.split_whitespace().next().ok_or_else(|| {
                Error::parse(format!("{source}:{line_no}"), "empty record header")
            })?;
            current = Some((id.to_string(), line_no, Vec::new()));
            continue;
        }
        let Some((id, _, seq)) = current.as_mut() else {
            return Err(Error::parse(
                format!("{source}:{line_no}"),
                "sequence data before the first header",
            ));
        };
        for b in line.bytes() {
            match alphabet.index_of(b) {
                Some(i) => seq.push(i),
                None => {
                    return Err(Error::parse(
                        format!("{source}:{line_no}"),
                        format!(
                            "record '{id}' offset {}: symbol '{}' is not in the alphabet",
                            seq.len() + 1,
                            b as char
                        ),
                    ))
                }
            }
        }
    }
    close(current, &mut records)?;
    Ok(records)
}

pub fn write_fasta<W: Write>(mut out: W, records: &[FastaRecord], alphabet: &Alphabet) -> Result<()> {
    for r in records {
        writeln!(out, ">{}", r.id)?;
        let text = alphabet.decode(&r.seq);
        for chunk in text.as_bytes().chunks(LINE_WIDTH) {
            out.write_all(chunk)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_fasta_file(path: impl AsRef<Path>, records: &[FastaRecord], alphabet: &Alphabet) -> Result<()> {
    write_fasta(BufWriter::new(fs::File::create(path)?), records, alphabet)
}

pub const BOUNDARIES_HEADER: &str = "seq_id\tleft\tright";

/// One row per sequence: the extracted region, or `EMPTY` in both columns.
pub fn write_boundaries<W: Write>(mut out: W, ids: &[String], regions: &[Option<Region>]) -> Result<()> {
    writeln!(out, "{BOUNDARIES_HEADER}")?;
    for (id, r) in ids.iter().zip(regions) {
        match r {
            Some(r) => writeln!(out, "{id}\t{}\t{}", r.start, r.end)?,
            None => writeln!(out, "{id}\tEMPTY\tEMPTY")?,
        }
    }
    out.flush()?;
    Ok(())
}

pub const GROUND_TRUTH_HEADER: &str = "seq_id\tlb\trb\tmutated_positions";

pub fn write_ground_truth<W: Write>(mut out: W, ids: &[String], planted: &[PlantedSequence]) -> Result<()> {
    writeln!(out, "{GROUND_TRUTH_HEADER}")?;
    for (id, p) in ids.iter().zip(planted) {
        let mutated: Vec<String> = p.mutated.iter().map(|m| m.to_string()).collect();
        writeln!(out, "{id}\t{}\t{}\t{}", p.lb, p.rb, mutated.join(","))?;
    }
    out.flush()?;
    Ok(())
}

/// Ground-truth row as read back: `(seq_id, lb, rb, mutated)`.
pub type TruthRow = (String, usize, usize, Vec<usize>);

pub fn parse_ground_truth(text: &str, source: &str) -> Result<Vec<TruthRow>> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let loc = || format!("{source}:{}", n + 1);
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(Error::parse(loc(), format!("expected 4 columns, found {}", cols.len())));
        }
        let num = |s: &str| s.trim().parse::<usize>().map_err(|e| Error::parse(loc(), format!("'{s}': {e}")));
        let mutated = if cols[3].trim().is_empty() {
            Vec::new()
        } else {
            cols[3].split(',').map(num).collect::<Result<Vec<_>>>()?
        };
        rows.push((cols[0].to_string(), num(cols[1])?, num(cols[2])?, mutated));
    }
    Ok(rows)
}
