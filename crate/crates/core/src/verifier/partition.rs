use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} assigned to community {index}, but k = {k}")]
    CommunityOutOfRange {
        vertex: usize,
        index: usize,
        k: usize,
    },
    #[error("community {0} is empty")]
    EmptyCommunity(usize),
    #[error("partition covers {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("need at least 2 communities, got {0}")]
    TooFewCommunities(usize),
    #[error("vertex {0} appears in more than one block or in none")]
    NotAPartition(usize),
    #[error("malformed partition text: {0}")]
    Parse(&'static str),
}

/// Assignment of each vertex to one of `k` nonempty communities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    assign: Vec<usize>,
    sizes: Vec<usize>,
}

impl Partition {
    pub fn new(assign: Vec<usize>, k: usize) -> Result<Self, PartitionError> {
        let mut sizes = vec![0; k];
        for (vertex, &index) in assign.iter().enumerate() {
            if index >= k {
                return Err(PartitionError::CommunityOutOfRange { vertex, index, k });
            }
            sizes[index] += 1;
        }
        if let Some(c) = sizes.iter().position(|&s| s == 0) {
            return Err(PartitionError::EmptyCommunity(c));
        }
        Ok(Partition { assign, sizes })
    }

    /// `k` is one more than the largest index.
    pub fn from_assignment(assign: Vec<usize>) -> Result<Self, PartitionError> {
        let k = assign.iter().max().map_or(0, |&m| m + 1);
        Self::new(assign, k)
    }

    /// Block `i` of `blocks` becomes community `i`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut assign = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= n {
                    return Err(PartitionError::VertexCount {
                        expected: n,
                        found: v + 1,
                    });
                }
                if assign[v] != usize::MAX {
                    return Err(PartitionError::NotAPartition(v));
                }
                assign[v] = i;
            }
        }
        if let Some(v) = assign.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::NotAPartition(v));
        }
        Self::new(assign, blocks.len())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.assign.len()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    #[inline]
    pub fn community_of(&self, v: usize) -> usize {
        self.assign[v]
    }

    #[inline]
    pub fn size(&self, community: usize) -> usize {
        self.sizes[community]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    /// Members of `community` in ascending order.
    pub fn members(&self, community: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.assign[v] == community)
            .collect()
    }

    /// All communities, each in ascending order, indexed by community.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k()];
        for (v, &c) in self.assign.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Same partition with communities renumbered by first appearance.
    pub fn canonical(&self) -> Partition {
        let mut relabel = vec![usize::MAX; self.k()];
        let mut next = 0;
        let assign = self
            .assign
            .iter()
            .map(|&c| {
                if relabel[c] == usize::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                relabel[c]
            })
            .collect();
        Partition::new(assign, self.k()).expect("relabelling keeps communities nonempty")
    }
}

/// Parses one line of space-separated community indices.
pub fn parse_partition(bytes: &[u8]) -> Result<Partition, PartitionError> {
    let text = std::str::from_utf8(bytes).map_err(|_| PartitionError::Parse("not text"))?;
    let line = text
        .strip_suffix('\n')
        .ok_or(PartitionError::Parse("missing trailing newline"))?;
    if line.is_empty() {
        return Err(PartitionError::Parse("no vertices"));
    }
    if line.contains('\n') {
        return Err(PartitionError::Parse("expected a single line"));
    }
    let assign = line
        .split(' ')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(PartitionError::Parse("expected a decimal index"));
            }
            tok.parse::<usize>()
                .map_err(|_| PartitionError::Parse("index too large"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::from_assignment(assign)
}

pub fn write_partition(p: &Partition) -> String {
    let mut out = p
        .assignment()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}
