//! Plain-text file formats.
//!
//! * graph: `n m`, then `m` lines `u v` with `0 <= u < v < n`
//! * layering / partition: `n` lines `v value`, vertex-sorted
//! * decomposition: `b`, then `b` lines `size v1 .. vk`, then `b - 1` tree edges `i j`
//! * coloring: `n k c1 .. ck`, then `n` lines `v x1 .. xk`
//! * vertex list (layouts, vertex sets): whitespace-separated vertex ids
//!
//! Readers reject wrong counts, unsorted vertex lines and trailing data.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::color::ColorAssignment;
use crate::decomposition::SimpleTreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layering::{Layering, VertexPartition};

struct Lines {
    lines: Vec<(usize, Vec<String>)>,
    pos: usize,
}

impl Lines {
    fn read<R: Read>(reader: R) -> Result<Self> {
        let mut lines = Vec::new();
        for (i, line) in BufReader::new(reader).lines().enumerate() {
            let line = line?;
            let tokens: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
            if !tokens.is_empty() {
                lines.push((i + 1, tokens));
            }
        }
        Ok(Lines { lines, pos: 0 })
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<u64>)> {
        let last = self.lines.last().map_or(1, |l| l.0);
        let (line, tokens) = self
            .lines
            .get(self.pos)
            .ok_or_else(|| Error::parse(last, format!("unexpected end of file, expected {what}")))?;
        self.pos += 1;
        let nums = tokens
            .iter()
            .map(|t| t.parse::<u64>().map_err(|_| Error::parse(*line, format!("`{t}` is not a non-negative integer"))))
            .collect::<Result<Vec<_>>>()?;
        Ok((*line, nums))
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some((line, _)) => Err(Error::parse(*line, "trailing data")),
            None => Ok(()),
        }
    }
}

fn expect_len(line: usize, nums: &[u64], len: usize, what: &str) -> Result<()> {
    if nums.len() != len {
        return Err(Error::parse(line, format!("{what}: expected {len} fields, found {}", nums.len())));
    }
    Ok(())
}

fn usize_of(line: usize, x: u64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::parse(line, "value too large"))
}

pub fn read_graph<R: Read>(reader: R) -> Result<Graph> {
    let mut lines = Lines::read(reader)?;
    let (line, header) = lines.next("header `n m`")?;
    expect_len(line, &header, 2, "graph header")?;
    let n = usize_of(line, header[0])?;
    let m = usize_of(line, header[1])?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, e) = lines.next("edge line")?;
        expect_len(line, &e, 2, "edge")?;
        let (u, v) = (usize_of(line, e[0])?, usize_of(line, e[1])?);
        if !(u < v && v < n) {
            return Err(Error::parse(line, format!("edge `{u} {v}` violates 0 <= u < v < {n}")));
        }
        edges.push((u, v));
    }
    lines.finish()?;
    Graph::from_edges(n, &edges)
}

pub fn write_graph<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    writeln!(w, "{} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

/// Reads `v value` lines; vertex `i` must appear on the `i`-th line.
fn read_vertex_values<R: Read>(reader: R) -> Result<Vec<usize>> {
    let lines = Lines::read(reader)?;
    let mut out = Vec::with_capacity(lines.lines.len());
    for (line, tokens) in &lines.lines {
        let nums = tokens
            .iter()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::parse(*line, format!("`{t}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        if nums.len() != 2 {
            return Err(Error::parse(*line, format!("vertex line: expected 2 fields, found {}", nums.len())));
        }
        if nums[0] != out.len() {
            return Err(Error::parse(*line, format!("expected vertex {}, found {}", out.len(), nums[0])));
        }
        out.push(nums[1]);
    }
    Ok(out)
}

fn write_vertex_values<W: Write>(values: &[usize], mut w: W) -> Result<()> {
    for (v, x) in values.iter().enumerate() {
        writeln!(w, "{v} {x}")?;
    }
    Ok(())
}

pub fn read_vertex_list<R: Read>(reader: R) -> Result<Vec<usize>> {
    let lines = Lines::read(reader)?;
    let mut out = Vec::new();
    for (line, tokens) in &lines.lines {
        for t in tokens {
            out.push(t.parse::<usize>().map_err(|_| Error::parse(*line, format!("`{t}` is not a vertex id")))?);
        }
    }
    Ok(out)
}

pub fn write_vertex_list<W: Write>(vertices: &[usize], mut w: W) -> Result<()> {
    let text: Vec<String> = vertices.iter().map(usize::to_string).collect();
    writeln!(w, "{}", text.join(" "))?;
    Ok(())
}

pub fn read_layering<R: Read>(reader: R) -> Result<Layering> {
    Ok(Layering::new(read_vertex_values(reader)?))
}

pub fn write_layering<W: Write>(l: &Layering, w: W) -> Result<()> {
    write_vertex_values(l.as_slice(), w)
}

pub fn read_partition<R: Read>(reader: R) -> Result<VertexPartition> {
    VertexPartition::new(read_vertex_values(reader)?)
}

pub fn write_partition<W: Write>(p: &VertexPartition, w: W) -> Result<()> {
    write_vertex_values(p.as_slice(), w)
}

pub fn read_decomposition<R: Read>(reader: R) -> Result<SimpleTreeDecomposition> {
    let mut lines = Lines::read(reader)?;
    let (line, header) = lines.next("bag count")?;
    expect_len(line, &header, 1, "decomposition header")?;
    let b = usize_of(line, header[0])?;
    let mut bags = Vec::with_capacity(b);
    for _ in 0..b {
        let (line, nums) = lines.next("bag line")?;
        let size = nums.first().copied().ok_or_else(|| Error::parse(line, "empty bag line"))?;
        let size = usize_of(line, size)?;
        expect_len(line, &nums, size + 1, "bag")?;
        bags.push(nums[1..].iter().map(|&x| usize_of(line, x)).collect::<Result<Vec<_>>>()?);
    }
    let mut edges = Vec::with_capacity(b.saturating_sub(1));
    for _ in 0..b.saturating_sub(1) {
        let (line, e) = lines.next("tree edge")?;
        expect_len(line, &e, 2, "tree edge")?;
        let (s, t) = (usize_of(line, e[0])?, usize_of(line, e[1])?);
        if s >= b || t >= b {
            return Err(Error::parse(line, format!("tree edge `{s} {t}` names a missing bag")));
        }
        edges.push((s, t));
    }
    lines.finish()?;
    SimpleTreeDecomposition::new(bags, &edges)
}

pub fn write_decomposition<W: Write>(d: &SimpleTreeDecomposition, mut w: W) -> Result<()> {
    writeln!(w, "{}", d.bag_count())?;
    for bag in d.bags() {
        write!(w, "{}", bag.len())?;
        for v in bag {
            write!(w, " {v}")?;
        }
        writeln!(w)?;
    }
    for (s, t) in d.tree().edges() {
        writeln!(w, "{s} {t}")?;
    }
    Ok(())
}

pub fn read_coloring<R: Read>(reader: R) -> Result<ColorAssignment> {
    let mut lines = Lines::read(reader)?;
    let (line, header) = lines.next("coloring header")?;
    if header.len() < 2 {
        return Err(Error::parse(line, "coloring header needs `n k c1 .. ck`"));
    }
    let n = usize_of(line, header[0])?;
    let k = usize_of(line, header[1])?;
    expect_len(line, &header, k + 2, "coloring header")?;
    let shape = header[2..].to_vec();
    let mut coords = Vec::with_capacity(n * k);
    for v in 0..n {
        let (line, nums) = lines.next("vertex color line")?;
        expect_len(line, &nums, k + 1, "vertex color line")?;
        if nums[0] != v as u64 {
            return Err(Error::parse(line, format!("expected vertex {v}, found {}", nums[0])));
        }
        coords.extend_from_slice(&nums[1..]);
    }
    lines.finish()?;
    ColorAssignment::from_coords(shape, coords)
}

pub fn write_coloring<W: Write>(c: &ColorAssignment, mut w: W) -> Result<()> {
    write!(w, "{} {}", c.vertex_count(), c.arity())?;
    for s in c.palette_shape() {
        write!(w, " {s}")?;
    }
    writeln!(w)?;
    for v in 0..c.vertex_count() {
        write!(w, "{v}")?;
        for x in c.color(v) {
            write!(w, " {x}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    read_graph(open(path.as_ref())?)
}

pub fn save_graph(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_graph(g, &mut w)?;
    Ok(w.flush()?)
}

pub fn load_layering(path: impl AsRef<Path>) -> Result<Layering> {
    read_layering(open(path.as_ref())?)
}

pub fn save_layering(path: impl AsRef<Path>, l: &Layering) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_layering(l, &mut w)?;
    Ok(w.flush()?)
}

pub fn load_partition(path: impl AsRef<Path>) -> Result<VertexPartition> {
    read_partition(open(path.as_ref())?)
}

pub fn save_partition(path: impl AsRef<Path>, p: &VertexPartition) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_partition(p, &mut w)?;
    Ok(w.flush()?)
}

pub fn load_decomposition(path: impl AsRef<Path>) -> Result<SimpleTreeDecomposition> {
    read_decomposition(open(path.as_ref())?)
}

pub fn save_decomposition(path: impl AsRef<Path>, d: &SimpleTreeDecomposition) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_decomposition(d, &mut w)?;
    Ok(w.flush()?)
}

pub fn load_coloring(path: impl AsRef<Path>) -> Result<ColorAssignment> {
    read_coloring(open(path.as_ref())?)
}

pub fn save_coloring(path: impl AsRef<Path>, c: &ColorAssignment) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_coloring(c, &mut w)?;
    Ok(w.flush()?)
}

pub fn load_vertex_list(path: impl AsRef<Path>) -> Result<Vec<usize>> {
    read_vertex_list(open(path.as_ref())?)
}

pub fn save_vertex_list(path: impl AsRef<Path>, vertices: &[usize]) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_vertex_list(vertices, &mut w)?;
    Ok(w.flush()?)
}
